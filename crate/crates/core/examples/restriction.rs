//! Restrict isotropic generators to the limit surface `X(4,5)` and confirm the
//! restriction is an isometry on the twelve generators that restrict.
//!
//! cargo run --example restriction

use enriques_severi::lattice::{generator_pair, pair_x, restrict, restrict_generator, restrictable_generators, IsoExpr};
use enriques_severi::Generator;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gens = restrictable_generators();
    for &g in &gens {
        let x = restrict_generator(g)?;
        println!("{g:>6} -> R: {:<16} P: {}", x.r_part().to_string(), x.p_part());
    }

    let mut worst = 0;
    for &a in &gens {
        for &b in &gens {
            let d = pair_x(&restrict_generator(a)?, &restrict_generator(b)?)? - generator_pair(a, b);
            worst = worst.max(d.abs());
        }
    }
    println!("largest Gram discrepancy over {} pairs: {worst}", gens.len() * gens.len());

    let bundle = IsoExpr::from_terms([(3, Generator::eij(5, 6)?), (3, Generator::e(5)?)]);
    let x = restrict(&bundle)?;
    println!("{bundle} restricts to ({}, {}), square {} = {}", x.r_part(), x.p_part(), x.square(), bundle.square());
    Ok(())
}
