use serde::{Deserialize, Serialize};

use crate::error::LedgerError;
use crate::lattice::pair;

use super::plan::LimitPlan;

/// Node count of a curve `Y = C u_T D` on the limit surface.
///
/// `C = C_0 + C_1 + ... + C_l` meets `T` in `m x + p_1 + ... + p_k`, and
/// `D = D_0 + D_1 + ... + D_k` meets `T` in `m x + q_1 + ... + q_l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ledger {
    pub c0_sq: i64,
    pub d0_sq: i64,
    pub m: i64,
    pub k: i64,
    pub l: i64,
    /// Intersections among the components of `C`.
    pub gamma: i64,
    /// Intersections among the components of `D`.
    pub delta: i64,
    /// Nodes of `C_0`.
    pub gamma0: i64,
    /// `p_a(D_0)`, the number of nodes of the rational curve `D_0`.
    pub delta0: i64,
    pub pa_y: i64,
    pub dim_linear_system: i64,
    /// Nodes left after smoothing the `m`-tacnode into `m - 1` nodes.
    pub node_budget: i64,
}

pub fn ledger(c0_sq: i64, d0_sq: i64, m: i64, k: i64, l: i64, gamma: i64, delta: i64) -> Result<Ledger, LedgerError> {
    let num_c = c0_sq - m - k;
    if num_c % 2 != 0 {
        return Err(LedgerError::OddC0(num_c));
    }
    let num_d = d0_sq - m - l;
    if num_d % 2 != 0 {
        return Err(LedgerError::OddD0(num_d));
    }
    let gamma0 = num_c / 2;
    let delta0 = num_d / 2 + 1;
    let pa_y = gamma0 + gamma + delta0 + delta + m;
    Ok(Ledger {
        c0_sq,
        d0_sq,
        m,
        k,
        l,
        gamma,
        delta,
        gamma0,
        delta0,
        pa_y,
        dim_linear_system: pa_y - 1,
        node_budget: m - 1 + gamma0 + gamma + delta0 + delta,
    })
}

/// The ledger of the curve the plan glues together.
///
/// `C_0` meets `T` in `m x` plus three further points. When fewer than three
/// of them are matched by curves `D_i`, the remaining `3 - k` points are
/// blown up on the `P`-side, which lowers `D_0^2` by one and adds one
/// intersection with `D_0` per point.
pub fn plan_ledger(plan: &LimitPlan) -> Result<Ledger, LedgerError> {
    let m = plan.lp0.dot_t() - 3;
    let extra = 3 - plan.k as i64;
    let gamma: i64 = plan.c_list.iter().map(|c| pair(&plan.lp0, c).expect("same surface")).sum();
    let delta: i64 = plan
        .d_list
        .iter()
        .map(|d| pair(&plan.lpp0, d).expect("same surface"))
        .sum::<i64>()
        + extra;
    ledger(
        plan.lp0.square(),
        plan.lpp0.square() - extra,
        m,
        3,
        plan.k as i64,
        gamma,
        delta,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::dispatch;
    use crate::moduli::FundamentalCoefficients;

    #[test]
    fn smooth_elliptic_side() {
        // C0^2 = m + k, so C0 has no nodes.
        let l = ledger(1, 3, 1, 0, 0, 0, 0).unwrap();
        assert_eq!(l.gamma0, 0);
        assert_eq!(l.pa_y, l.delta0 + 1);
        assert_eq!(l.node_budget, l.pa_y - 1);
    }

    #[test]
    fn parity_failures() {
        assert_eq!(ledger(27, 9, 6, 0, 0, 0, 0), Err(LedgerError::OddC0(21)));
        assert_eq!(ledger(28, 9, 6, 0, 0, 0, 0), Err(LedgerError::OddD0(3)));
    }

    #[test]
    fn a0_equals_a9_three() {
        let plan = dispatch(&FundamentalCoefficients::with(&[(0, 3), (9, 3)])).unwrap();
        let l = plan_ledger(&plan).unwrap();
        assert_eq!((l.c0_sq, l.d0_sq, l.m), (27, 6, 6));
        assert_eq!((l.gamma0, l.delta0, l.delta), (9, 1, 3));
        assert_eq!(l.pa_y, 19);
        assert_eq!(plan.source.genus(), 19);
    }
}
