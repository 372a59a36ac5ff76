//! Numerical positivity: oddness, condition (*), (-1)-classes and nef/big
//! tests on blown-up planes in general position.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::PositivityError;
use crate::lattice::{canonical_class, pair, DivClass, Side, Surface};

/// Largest number of blown-up points with a trusted finite (-1)-class list.
pub const MAX_DEL_PEZZO_POINTS: usize = 8;

/// Largest line-degree of a (-1)-class on a del Pezzo surface of degree >= 1.
const MAX_MINUS_ONE_DEGREE: i64 = 6;

/// The four inequalities of condition (*) on `a*s + b*f - sum(g_i e_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarReport {
    /// `a >= 1` and `b >= 0`.
    pub cond_i: bool,
    /// `a >= g_i` for all `i`.
    pub cond_ii: bool,
    /// `a + b >= sum(g_i)`.
    pub cond_iii: bool,
    /// `a + 2b >= sum(g_i) + 4`.
    pub cond_iv: bool,
    pub minus_l_dot_k: i64,
    pub holds: bool,
}

impl StarReport {
    /// First failing condition, for diagnostics.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.cond_i, "(i) a >= 1, b >= 0"),
            (self.cond_ii, "(ii) a >= g_i"),
            (self.cond_iii, "(iii) a + b >= sum g_i"),
            (self.cond_iv, "(iv) a + 2b >= sum g_i + 4"),
        ]
        .into_iter()
        .find_map(|(ok, name)| (!ok).then_some(name))
    }
}

fn require_r(c: &DivClass) -> Result<(), PositivityError> {
    match c.surface().side {
        Side::R => Ok(()),
        Side::P => Err(PositivityError::NotR(c.surface())),
    }
}

fn require_small_p(c: &DivClass) -> Result<usize, PositivityError> {
    let s = c.surface();
    if s.side != Side::P {
        return Err(PositivityError::NotP(s));
    }
    if s.n > MAX_DEL_PEZZO_POINTS {
        return Err(PositivityError::TooManyPoints(s.n));
    }
    Ok(s.n)
}

/// Odd means `L.f` is odd.
pub fn is_odd(c: &DivClass) -> Result<bool, PositivityError> {
    require_r(c)?;
    let dot_f = pair(c, &DivClass::fibre(c.surface().n))?;
    Ok(dot_f.rem_euclid(2) == 1)
}

pub fn condition_star(c: &DivClass) -> Result<StarReport, PositivityError> {
    require_r(c)?;
    let (a, b) = (c.leading(), c.fibre_coeff());
    let gammas = c.multiplicities();
    let sum: i64 = gammas.iter().sum();
    let cond_i = a >= 1 && b >= 0;
    let cond_ii = gammas.iter().all(|&g| a >= g);
    let cond_iii = a + b >= sum;
    let cond_iv = a + 2 * b >= sum + 4;
    let minus_l_dot_k = -pair(c, &canonical_class(c.surface()))?;
    Ok(StarReport {
        cond_i,
        cond_ii,
        cond_iii,
        cond_iv,
        minus_l_dot_k,
        holds: cond_i && cond_ii && cond_iii && cond_iv,
    })
}

/// `c^2 = -1` and `c.K = -1`.
pub fn is_minus_one(c: &DivClass) -> bool {
    let k = canonical_class(c.surface());
    c.square() == -1 && pair(c, &k).expect("same surface") == -1
}

fn search_minus_one(n: usize) -> Vec<DivClass> {
    // d^2 - sum m_i^2 = -1 and 3d - sum m_i = 1, with -1 <= m_i <= d.
    fn rec(n: usize, d: i64, mults: &mut Vec<i64>, sum: i64, sq: i64, out: &mut Vec<DivClass>) {
        let (target_sum, target_sq) = (3 * d - 1, d * d + 1);
        if mults.len() == n {
            if sum == target_sum && sq == target_sq {
                out.push(DivClass::on_p(d, mults));
            }
            return;
        }
        let left = (n - mults.len()) as i64;
        for m in -1..=d {
            let (s2, q2) = (sum + m, sq + m * m);
            if q2 > target_sq {
                if m > 0 {
                    break;
                }
                continue;
            }
            // the remaining entries lie in [-1, d]
            if s2 - left + 1 > target_sum || s2 + (left - 1) * d < target_sum {
                continue;
            }
            mults.push(m);
            rec(n, d, mults, s2, q2, out);
            mults.pop();
        }
    }
    let mut out = Vec::new();
    for d in 0..=MAX_MINUS_ONE_DEGREE {
        rec(n, d, &mut Vec::with_capacity(n), 0, 0, &mut out);
    }
    out.sort();
    out
}

/// Every (-1)-class on `P(n)`, `n <= 8`, sorted.
pub fn minus_one_classes(n: usize) -> Result<&'static [DivClass], PositivityError> {
    static CACHE: [OnceLock<Vec<DivClass>>; MAX_DEL_PEZZO_POINTS + 1] = [const { OnceLock::new() }; MAX_DEL_PEZZO_POINTS + 1];
    if n > MAX_DEL_PEZZO_POINTS {
        return Err(PositivityError::TooManyPoints(n));
    }
    Ok(CACHE[n].get_or_init(|| search_minus_one(n)))
}

/// Classes whose nonnegative cone is the nef cone of `P(n)` in general position.
fn nef_test_classes(n: usize) -> Result<Vec<DivClass>, PositivityError> {
    match n {
        0 => Ok(vec![DivClass::line(0)]),
        1 => Ok(vec![
            DivClass::exceptional(Surface::p(1), 1)?,
            DivClass::on_p(1, &[1]),
        ]),
        _ => Ok(minus_one_classes(n)?.to_vec()),
    }
}

/// Nef test on `P(n)`, `n <= 8`, valid for points in general position.
pub fn is_nef_p(c: &DivClass) -> Result<bool, PositivityError> {
    let n = require_small_p(c)?;
    Ok(nef_test_classes(n)?
        .iter()
        .all(|e| pair(c, e).expect("same surface") >= 0))
}

/// First test class with negative product, if any.
pub fn nef_obstruction(c: &DivClass) -> Result<Option<DivClass>, PositivityError> {
    let n = require_small_p(c)?;
    Ok(nef_test_classes(n)?
        .into_iter()
        .find(|e| pair(c, e).expect("same surface") < 0))
}

pub fn is_big_and_nef_p(c: &DivClass) -> Result<bool, PositivityError> {
    Ok(is_nef_p(c)? && c.square() > 0)
}

/// All pairwise products vanish.
pub fn are_pairwise_disjoint(cs: &[DivClass]) -> Result<bool, PositivityError> {
    for (i, a) in cs.iter().enumerate() {
        for b in &cs[i + 1..] {
            if pair(a, b)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
