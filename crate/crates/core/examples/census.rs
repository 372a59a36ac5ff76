//! (-1)-classes and nefness on the plane blown up in general points.
//!
//! cargo run --example census

use enriques_severi::positivity::{is_big_and_nef_p, minus_one_classes, nef_obstruction};
use enriques_severi::DivClass;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 0..=8 {
        let classes = minus_one_classes(n)?;
        let sample: Vec<String> = classes.iter().rev().take(3).map(|c| c.to_string()).collect();
        println!("P({n}): {:>3} classes, e.g. {}", classes.len(), sample.join(", "));
    }

    for c in [
        DivClass::on_p(2, &[1, 1, 1, 1, 0]),
        DivClass::on_p(2, &[2, 0, 0, 0, 0]),
        DivClass::on_p(3, &[1, 1, 1, 1, 1]),
        DivClass::on_p(1, &[2, 0, 0, 0, 0]),
    ] {
        match nef_obstruction(&c)? {
            Some(e) => println!("{c}: not nef, negative on {e}"),
            None => println!("{c}: nef, big and nef = {}", is_big_and_nef_p(&c)?),
        }
    }
    Ok(())
}
