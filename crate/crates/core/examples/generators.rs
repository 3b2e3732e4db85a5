//! Two independent ASM generators, and the sharded parallel count.

use asmkey::enumeration::{asms_by_row_sums, count_asms};
use asmkey::{generate_asms, SweepOptions};

fn main() -> asmkey::Result<()> {
    for n in 1..=7 {
        let via_triangles = generate_asms(n)?.count();
        let via_rows = asms_by_row_sums(n)?.len();
        let sharded = count_asms(n, &SweepOptions { shards: 4, ..SweepOptions::default() })?;
        println!("n = {n}: {via_triangles} {via_rows} {sharded}");
    }
    Ok(())
}
