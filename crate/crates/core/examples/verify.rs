//! The coverage sweep: every non-2-divisible component in a genus range gets a
//! limit plan, and every plan's checklist is evaluated.
//!
//! cargo run --release --example verify -- 2 50

use std::collections::BTreeMap;

use enriques_severi::degeneration::sweep;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<i64>().expect("genus bound"));
    let lo = args.next().unwrap_or(2);
    let hi = args.next().unwrap_or(50);

    let report = sweep(lo, hi);
    println!("genus {lo}..{hi}: {} components, {} verified", report.components, report.verified);

    let mut reasons: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for f in &report.failures {
        for r in &f.reasons {
            let key = r.split(':').next().unwrap_or(r).to_string();
            let tuple = f.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
            reasons.entry(key).or_default().push(format!("g={} {tuple}", f.genus));
        }
    }
    for (reason, hits) in &reasons {
        println!("  {} x {reason}", hits.len());
        for h in hits.iter().take(4) {
            println!("      {h}");
        }
    }
}
