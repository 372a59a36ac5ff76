use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::moduli::{enumerate_range, Filter, FundamentalCoefficients};

use super::plan::dispatch;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepFailure {
    pub genus: i64,
    pub coefficients: Vec<i64>,
    pub case_id: Option<String>,
    pub reasons: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub components: usize,
    pub verified: usize,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_one(fc: &FundamentalCoefficients) -> Option<SweepFailure> {
    let fail = |case_id: Option<String>, reasons: Vec<String>| SweepFailure {
        genus: fc.genus(),
        coefficients: fc.to_vec(),
        case_id,
        reasons,
    };
    match dispatch(fc) {
        Ok(plan) if plan.verified() => None,
        Ok(plan) => Some(fail(
            Some(plan.case_id.to_string()),
            plan.checklist
                .failures()
                .map(|c| format!("{}: {}", c.name, c.detail))
                .collect(),
        )),
        Err(e) => Some(fail(None, vec![e.to_string()])),
    }
}

/// Dispatch every tuple on the current rayon pool; failures keep input order.
pub fn sweep_tuples(tuples: &[FundamentalCoefficients]) -> SweepReport {
    let failures: Vec<SweepFailure> = tuples.par_iter().filter_map(check_one).collect();
    SweepReport {
        components: tuples.len(),
        verified: tuples.len() - failures.len(),
        failures,
    }
}

/// Every valid, `eps = 0`, non-2-divisible tuple with genus in `lo..=hi`.
pub fn sweep(lo: i64, hi: i64) -> SweepReport {
    sweep_tuples(&enumerate_range(lo, hi, Filter::NonTwoDivisible))
}
