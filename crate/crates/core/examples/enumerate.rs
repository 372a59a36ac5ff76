//! Moduli components of polarized Enriques surfaces of a given genus, listed by
//! fundamental coefficients.
//!
//! cargo run --example enumerate -- 7

use enriques_severi::moduli::{enumerate_components, Filter};

fn main() {
    let g: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let all = enumerate_components(g, Filter::All);
    let odd = enumerate_components(g, Filter::NonTwoDivisible);
    println!("genus {g}: {} tuples, {} not 2-divisible", all.len(), odd.len());
    for fc in &all {
        let tag = if fc.is_two_divisible() { "2-div" } else { "" };
        println!("  {fc:<28} L^2 = {:<4} {tag}", fc.square());
    }
}
