//! Key-avoidance versus classical avoidance on the ASMs of one size.

use asmkey::patterns::classically_avoids;
use asmkey::{generate_asms, key_avoids, perm_contains, PatternSet, Permutation};

fn main() -> asmkey::Result<()> {
    let sigma: Permutation = "34512".parse()?;
    for pi in ["231", "312", "321"] {
        println!("{sigma} contains {pi}: {}", perm_contains(&sigma, &pi.parse()?));
    }

    let n = 5;
    for s in ["312", "321", "312&321", "123&321"] {
        let s: PatternSet = s.parse()?;
        let (mut by_key, mut classical) = (0, 0);
        for a in generate_asms(n)? {
            by_key += key_avoids(&a, &s) as u32;
            classical += classically_avoids(&a, &s) as u32;
        }
        println!("n = {n}, avoid {s}: {by_key} by key, {classical} classically");
    }
    Ok(())
}
