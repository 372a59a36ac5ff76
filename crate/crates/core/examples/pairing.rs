//! Intersection numbers on the blown-up symmetric square, the blown-up plane
//! and the isotropic lattice of an Enriques surface.
//!
//! cargo run --example pairing

use enriques_severi::lattice::{canonical_class, iso_pair, pair, t_class, Generator, IsoExpr};
use enriques_severi::{DivClass, Surface};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = Surface::r(4);
    let t = t_class(r);
    let k = canonical_class(r);
    println!("on {r}: T = {t}, K = {k}");
    println!("  T^2 = {}, T.K = {}, p_a(T) = {}", t.square(), pair(&t, &k)?, t.arithmetic_genus());

    let l = DivClass::on_r(3, 2, &[1, 1, 0, 0]);
    println!("  L = {l}: L^2 = {}, L.T = {}, p_a = {}", l.square(), l.dot_t(), l.arithmetic_genus());

    let p = Surface::p(5);
    let conic = DivClass::on_p(2, &[1, 1, 1, 1, 1]);
    println!("on {p}: conic {conic} has square {} and T-degree {}", conic.square(), conic.dot_t());

    let e1 = IsoExpr::generator(Generator::e(1)?);
    let e9_10 = IsoExpr::generator(Generator::eij(9, 10)?);
    let e1_2 = IsoExpr::generator(Generator::eij(1, 2)?);
    println!("isotropic lattice: E1.E9.10 = {}", iso_pair(&e1, &e9_10));
    println!("                   E1.E1.2  = {}", iso_pair(&e1, &e1_2));
    println!("                   E1.2.E9.10 = {}", iso_pair(&e1_2, &e9_10));
    Ok(())
}
