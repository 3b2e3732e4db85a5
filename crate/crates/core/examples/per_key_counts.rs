//! How many ASMs share each key, and the block-product prediction for keys
//! avoiding 312 and 321.

use asmkey::enumeration::{composition_of, predicted_count_for_key};
use asmkey::counts_by_key;

fn main() -> asmkey::Result<()> {
    let n = 4;
    let counts = counts_by_key(n)?;
    for (key, count) in &counts {
        match composition_of(key) {
            Ok(c) => println!("{key}: {count}  blocks {c}, predicted {}", predicted_count_for_key(key)?),
            Err(_) => println!("{key}: {count}"),
        }
    }
    println!("total {}", counts.values().sum::<u64>());
    Ok(())
}
