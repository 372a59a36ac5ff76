//! Build the limit line bundle on `R ∪_T P` for one component and print every
//! check behind it.
//!
//! cargo run --example plan -- 3,0,0,0,0,0,0,0,3,0,0

use enriques_severi::cli::parse_coefficients;
use enriques_severi::degeneration::plan_ledger;
use enriques_severi::dispatch;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,1,1,1,1,1,1,1,1,1,0".to_string());
    let fc = parse_coefficients(&arg)?;
    let plan = dispatch(&fc)?;

    println!("{fc} (genus {}) -> {} via {:?}", fc.genus(), plan.case_id, plan.route());
    println!("  L_iso = {}", plan.l_iso);
    println!("  L'  = {}  on R({})", plan.lp, plan.s);
    println!("  L'' = {}  on P({})", plan.lpp, plan.t);
    if plan.explicit.is_none() {
        let show = |v: &[enriques_severi::DivClass]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
        println!("  L'0 = {}, C = [{}]", plan.lp0, show(&plan.c_list));
        println!("  L''0 = {}, D = [{}], extra = [{}]", plan.lpp0, show(&plan.d_list), show(&plan.extra_d));
        println!("  m = {:?}", plan.m);
        if let Ok(l) = plan_ledger(&plan) {
            println!("  nodes: gamma0 = {}, delta0 = {}, p_a(Y) = {}", l.gamma0, l.delta0, l.pa_y);
        }
    }
    for c in plan.checklist.iter() {
        println!("  [{}] {}: {}", if c.pass { "ok" } else { "FAIL" }, c.name, c.detail);
    }
    println!("verified: {}", plan.verified());
    Ok(())
}
