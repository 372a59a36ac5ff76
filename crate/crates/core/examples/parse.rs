//! The divisor expression grammar used by the command line, including the
//! error positions it reports.
//!
//! cargo run --example parse

use enriques_severi::cli::{parse_divisor, parse_model};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (model, text) in [
        ("R(4)", "2s - f - e1 - e2 - e3 - e4"),
        ("P(5)", "-e5 + 6l - 2e1 - 2e2 - 2e3 - 2e4"),
        ("E", "E9.10 + E9 + E9"),
        ("R(4)", "2s+e5"),
        ("P(2)", "3l+"),
        ("E", "E3.3"),
    ] {
        let m = parse_model(model)?;
        match parse_divisor(text, m) {
            Ok(p) => println!("{model:>5}  {text:<34} => {p}"),
            Err(e) => {
                println!("{model:>5}  {text:<34} => error: {e}");
                println!("{:>7}{}^", "", " ".repeat(e.offset));
            }
        }
    }
    Ok(())
}
