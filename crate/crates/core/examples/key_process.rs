//! Walk an ASM down to its southwest key, one removal at a time.

use asmkey::key::{key_trace, removable_positions};
use asmkey::{sw_key, Asm};

fn main() -> asmkey::Result<()> {
    let a = Asm::from_rows(&[
        [0, 0, 1, 0, 0],
        [0, 1, -1, 1, 0],
        [1, 0, 0, -1, 1],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
    ])?;
    println!("removable -1s: {:?}", removable_positions(&a));
    for step in key_trace(&a) {
        if let Some(r) = &step.removal {
            println!(
                "removed {} using staircase {:?}, created {:?}",
                r.minus_one, r.staircase, r.created
            );
        }
        println!("{}\n", step.asm);
    }
    println!("key = {}", sw_key(&a));
    Ok(())
}
