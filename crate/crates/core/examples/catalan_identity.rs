//! Both sides of the Catalan identity for n up to 14.

use asmkey::catalan_identity_check;

fn main() -> asmkey::Result<()> {
    for n in 1..=14 {
        let c = catalan_identity_check(n)?;
        println!("n = {n:>2}: {} = {} = {} ({} keys)", c.lhs, c.rhs1, c.rhs2, c.breakdown.len());
    }
    let c = catalan_identity_check(4)?;
    for term in &c.breakdown {
        println!("{} {} -> {}", term.key.compact(), term.composition, term.count);
    }
    Ok(())
}
