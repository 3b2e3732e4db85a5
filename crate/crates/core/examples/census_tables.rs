//! Regenerate key-avoidance counts and compare them with the shipped tables.
//!
//! `cargo run --release --example census_tables -- 7` goes up to n = 7.

use asmkey::fixtures;
use asmkey::{sweep, Mode, PatternSet, SweepOptions};

fn main() -> asmkey::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for table in 1..=3u8 {
        let rows = fixtures::table(table);
        let sets: Vec<PatternSet> = rows.iter().map(|r| r.sets[0].clone()).collect();
        let upto = max_n.min(rows[0].counts.len());
        let counts = sweep(1..=upto, &sets, Mode::Key, &SweepOptions::default())?;
        println!("table {table}");
        for (row, c) in rows.iter().zip(&counts) {
            let ok = c.counts[..] == row.counts[..upto];
            println!("  {:<24} {:?} {}", row.excluded, c.counts, if ok { "ok" } else { "MISMATCH" });
        }
    }
    Ok(())
}
