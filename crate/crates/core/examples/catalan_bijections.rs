//! Triangles with gapless columns of at most two values, their inversion
//! sequences and Dyck words.

use asmkey::triangles::{dyck_from_invseq, invseq_from_triangle, is_gapless, max_two_values_per_column};
use asmkey::{asm_from_triangle, generate_triangles, sw_key};

fn main() -> asmkey::Result<()> {
    let n = 4;
    for t in generate_triangles(n)?.filter(|t| is_gapless(t) && max_two_values_per_column(t)) {
        let e = invseq_from_triangle(&t)?;
        let key = sw_key(&asm_from_triangle(&t));
        println!("key {}  inversion sequence {}  Dyck word {}", key.compact(), e, dyck_from_invseq(&e)?);
    }
    Ok(())
}
