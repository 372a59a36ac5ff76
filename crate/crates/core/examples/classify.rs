//! Validate fundamental coefficients and sort them into the three parity
//! cases that organize the degeneration argument.
//!
//! cargo run --example classify

use enriques_severi::moduli::{FundamentalCoefficients, TrichotomyCase};

fn main() {
    let samples = [
        FundamentalCoefficients::new(1, [1, 1, 0, 0, 0, 0, 0], 1, 0, 0),
        FundamentalCoefficients::new(2, [1, 1, 0, 0, 0, 0, 0], 1, 1, 0),
        FundamentalCoefficients::new(1, [1, 1, 1, 1, 1, 1, 1], 1, 1, 0),
        FundamentalCoefficients::new(2, [2, 0, 0, 0, 0, 0, 0], 2, 0, 0),
        FundamentalCoefficients::new(3, [0, 0, 0, 0, 0, 0, 0], 1, 1, 0),
    ];
    for fc in samples {
        print!("{fc:<28} genus {:<3}", fc.genus());
        if let Err(v) = fc.validate() {
            let reasons: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            println!("invalid: {}", reasons.join("; "));
            continue;
        }
        match fc.trichotomy() {
            Ok(TrichotomyCase::CaseI(w)) => println!("CASE_I  with i = {}, k,l,m = {:?}", w.i, w.klm),
            Ok(case) => println!("{}", case.label()),
            Err(e) => println!("out of scope: {e}"),
        }
    }

}
