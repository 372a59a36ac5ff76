//! Expected dimensions of Severi varieties and of the logarithmic Severi
//! varieties used on each side of the degeneration.
//!
//! cargo run --example severi

use enriques_severi::degeneration::{log_severi_dims, severi_regular_dim};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for g in [2, 5, 10] {
        let dims: Vec<i64> = (0..g).map(|d| severi_regular_dim(g, d)).collect::<Result<_, _>>()?;
        println!("genus {g}: regular dimensions by node count {dims:?}");
    }

    // A genus 9 limit with L.T = 9 and tangency order 6, as in the a0 = a9 = 3 case.
    let d = log_severi_dims(1, 9, 6, &[])?;
    println!(
        "L.T = {}, m = {}: elliptic on R has dimension {}, rational on P has dimension {}",
        d.lt, d.m, d.elliptic_on_r, d.rational_on_p
    );
    println!("fixed tangency [2, 3] on a genus 1 curve: {}", log_severi_dims(1, 9, 6, &[2, 3])?.fixed_points);
    Ok(())
}
