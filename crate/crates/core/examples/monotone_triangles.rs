//! Monotone triangles, gaplessness and bad -1s.

use asmkey::triangles::{bad_minus_ones, is_gapless, max_two_values_per_column};
use asmkey::{asm_from_triangle, generate_triangles, triangle_from_asm, Asm};

fn main() -> asmkey::Result<()> {
    let a = Asm::from_rows(&[
        [0, 0, 1, 0, 0],
        [0, 1, -1, 1, 0],
        [1, 0, 0, -1, 1],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
    ])?;
    let t = triangle_from_asm(&a);
    println!("{t}\n");
    println!("gapless: {}, at most two values per column: {}", is_gapless(&t), max_two_values_per_column(&t));
    for b in bad_minus_ones(&a) {
        println!("bad -1 at {} (west 1 at {}, witness {})", b.minus_one, b.west_one, b.witness);
    }
    assert_eq!(asm_from_triangle(&t), a);

    for n in 1..=6 {
        let (all, gapless) = generate_triangles(n)?.fold((0, 0), |(all, g), t| (all + 1, g + is_gapless(&t) as u32));
        println!("n = {n}: {all} triangles, {gapless} gapless");
    }
    Ok(())
}
