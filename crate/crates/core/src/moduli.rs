//! Fundamental-coefficient tuples `(a0, a1..a7, a9, a10, eps)`: validation,
//! square and genus, 2-divisibility, the three-way parity classification and
//! enumeration of all tuples of a given genus.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::ModuliError;
use crate::lattice::{Generator, IsoExpr};

/// Coefficient indices in storage order.
pub const INDICES: [u8; 10] = [0, 1, 2, 3, 4, 5, 6, 7, 9, 10];

/// Fundamental coefficients of a polarization.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FundamentalCoefficients {
    /// `a0, a1..a7, a9, a10`.
    coeffs: [i64; 10],
    eps: u8,
}

fn slot(index: u8) -> usize {
    match index {
        0..=7 => index as usize,
        9 => 8,
        10 => 9,
        _ => panic!("a{index} is not a fundamental coefficient"),
    }
}

impl FundamentalCoefficients {
    pub fn new(a0: i64, a: [i64; 7], a9: i64, a10: i64, eps: u8) -> Self {
        let mut coeffs = [0; 10];
        coeffs[0] = a0;
        coeffs[1..8].copy_from_slice(&a);
        coeffs[8] = a9;
        coeffs[9] = a10;
        FundamentalCoefficients { coeffs, eps }
    }

    /// From the 11 values `a0, a1..a7, a9, a10, eps`.
    pub fn from_slice(v: &[i64]) -> Result<Self, ModuliError> {
        if v.len() != 11 {
            return Err(ModuliError::Invalid(format!(
                "expected 11 values a0,a1..a7,a9,a10,eps; got {}",
                v.len()
            )));
        }
        let eps = u8::try_from(v[10])
            .ok()
            .filter(|e| *e <= 1)
            .ok_or_else(|| ModuliError::Invalid(format!("eps must be 0 or 1, got {}", v[10])))?;
        let mut coeffs = [0; 10];
        coeffs.copy_from_slice(&v[..10]);
        Ok(FundamentalCoefficients { coeffs, eps })
    }

    /// Zero tuple with the given `(index, value)` entries set.
    pub fn with(entries: &[(u8, i64)]) -> Self {
        let mut out = FundamentalCoefficients { coeffs: [0; 10], eps: 0 };
        for &(i, v) in entries {
            out.coeffs[slot(i)] = v;
        }
        out
    }

    pub fn with_eps(mut self, eps: u8) -> Self {
        self.eps = eps;
        self
    }

    /// `a_index` for `index` in `{0, 1..7, 9, 10}`.
    pub fn a(&self, index: u8) -> i64 {
        self.coeffs[slot(index)]
    }

    pub fn eps(&self) -> u8 {
        self.eps
    }

    /// `[a0, a1..a7, a9, a10, eps]`.
    pub fn to_vec(&self) -> Vec<i64> {
        let mut v = self.coeffs.to_vec();
        v.push(self.eps as i64);
        v
    }

    /// `a1..a7`.
    pub fn middle(&self) -> [i64; 7] {
        let mut out = [0; 7];
        out.copy_from_slice(&self.coeffs[1..8]);
        out
    }

    /// Closed form `2 sum_{i<j in S} a_i a_j + 2 a0 (sum_{1..7} a_i + 2 a9 + 2 a10)`,
    /// `S = {1..7, 9, 10}`.
    pub fn square(&self) -> i64 {
        let s: Vec<i64> = INDICES[1..].iter().map(|&i| self.a(i)).collect();
        let total: i64 = s.iter().sum();
        let sum_sq: i64 = s.iter().map(|x| x * x).sum();
        // 2 sum_{i<j} a_i a_j = total^2 - sum of squares
        let cross = total * total - sum_sq;
        let seven: i64 = (1..=7).map(|i| self.a(i)).sum();
        cross + 2 * self.a(0) * (seven + 2 * self.a(9) + 2 * self.a(10))
    }

    pub fn genus(&self) -> i64 {
        self.square() / 2 + 1
    }

    /// `a1 E1 + ... + a7 E7 + a9 E9 + a10 E10 + a0 E{9,10}`; `eps` is dropped.
    pub fn to_iso_expr(&self) -> IsoExpr {
        let mut terms: Vec<(i64, Generator)> = [1u8, 2, 3, 4, 5, 6, 7, 9, 10]
            .iter()
            .map(|&i| (self.a(i), Generator::E(i)))
            .collect();
        terms.push((self.a(0), Generator::Eij(9, 10)));
        IsoExpr::from_terms(terms)
    }

    /// Every constraint the tuple violates; empty when valid.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for &i in &INDICES {
            if self.a(i) < 0 {
                out.push(Violation::Negative(i));
            }
        }
        for i in 1..7u8 {
            if self.a(i) < self.a(i + 1) {
                out.push(Violation::NotDecreasing(i));
            }
        }
        if self.a(0) > self.a(9) + self.a(10) {
            out.push(Violation::A0AboveA9PlusA10);
        }
        if self.a(0) < self.a(9) {
            out.push(Violation::A0BelowA9);
        }
        if self.a(9) < self.a(10) {
            out.push(Violation::A9BelowA10);
        }
        if self.eps == 1 && !self.all_even() {
            out.push(Violation::EpsWithOddCoefficient);
        }
        if self.square() <= 0 {
            out.push(Violation::NonPositiveSquare(self.square()));
        }
        out
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    fn all_even(&self) -> bool {
        self.coeffs.iter().all(|c| c % 2 == 0)
    }

    /// 2-divisible in the numerical lattice iff every coefficient is even.
    pub fn is_two_divisible(&self) -> bool {
        self.all_even()
    }

    /// Classify a valid, `eps = 0`, non-2-divisible tuple.
    ///
    /// Case I wins over II and III; its witness minimises
    /// `(a_k+a_l+a_m, a_i+a_k+a_l+a_m)` and then `(i, k, l, m)`.
    pub fn trichotomy(&self) -> Result<TrichotomyCase, ModuliError> {
        if let Err(v) = self.validate() {
            return Err(ModuliError::Invalid(join(&v)));
        }
        if self.eps != 0 {
            return Err(ModuliError::EpsOne);
        }
        if self.is_two_divisible() {
            return Err(ModuliError::TwoDivisible);
        }
        if let Some(w) = self.case_one_witness() {
            return Ok(TrichotomyCase::CaseI(w));
        }
        let a0 = self.a(0);
        let rest = || INDICES[1..].iter().map(|&i| self.a(i));
        if a0 > 0 && a0 % 2 == 1 && rest().all(|x| x % 2 == 0) {
            return Ok(TrichotomyCase::CaseII);
        }
        if a0 > 0 && rest().all(|x| x % 2 == 1) {
            return Ok(TrichotomyCase::CaseIII);
        }
        Err(ModuliError::Unclassified(self.to_string()))
    }

    /// Exhaustive search over the 2 x C(7,3) = 70 candidates.
    pub fn case_one_witness(&self) -> Option<Witness> {
        let mut best: Option<(i64, i64, u8, [u8; 3])> = None;
        for i in [9u8, 10] {
            for k in 1..=7u8 {
                for l in k + 1..=7 {
                    for m in l + 1..=7 {
                        let triple = self.a(k) + self.a(l) + self.a(m);
                        let total = self.a(i) + triple;
                        if total % 2 == 0 {
                            continue;
                        }
                        let key = (triple, total, i, [k, l, m]);
                        if best.is_none_or(|b| key < b) {
                            best = Some(key);
                        }
                    }
                }
            }
        }
        best.map(|(_, _, i, klm)| Witness { i, klm })
    }
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

impl fmt::Display for FundamentalCoefficients {
    /// `a0;a1,..,a7;a9,a10;eps`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mid: Vec<String> = (1..=7).map(|i| self.a(i).to_string()).collect();
        write!(
            f,
            "{};{};{},{};{}",
            self.a(0),
            mid.join(","),
            self.a(9),
            self.a(10),
            self.eps
        )
    }
}

/// A violated constraint on a fundamental tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Negative(u8),
    /// `a_i < a_{i+1}` for this `i` in `1..=6`.
    NotDecreasing(u8),
    A0AboveA9PlusA10,
    A0BelowA9,
    A9BelowA10,
    EpsWithOddCoefficient,
    NonPositiveSquare(i64),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Negative(i) => write!(f, "a{i} < 0"),
            Violation::NotDecreasing(i) => write!(f, "a{} < a{}", i, i + 1),
            Violation::A0AboveA9PlusA10 => f.write_str("a0 > a9 + a10"),
            Violation::A0BelowA9 => f.write_str("a0 < a9"),
            Violation::A9BelowA10 => f.write_str("a9 < a10"),
            Violation::EpsWithOddCoefficient => f.write_str("eps = 1 with an odd coefficient"),
            Violation::NonPositiveSquare(s) => write!(f, "square {s} <= 0"),
        }
    }
}

/// Indices `i in {9, 10}` and `k < l < m` in `1..=7` with `a_i + a_k + a_l + a_m` odd.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub i: u8,
    pub klm: [u8; 3],
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TrichotomyCase {
    CaseI(Witness),
    CaseII,
    CaseIII,
}

impl TrichotomyCase {
    pub fn label(&self) -> &'static str {
        match self {
            TrichotomyCase::CaseI(_) => "CASE_I",
            TrichotomyCase::CaseII => "CASE_II",
            TrichotomyCase::CaseIII => "CASE_III",
        }
    }
}

impl fmt::Display for TrichotomyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrichotomyCase::CaseI(w) => write!(
                f,
                "CASE_I(i={}, k,l,m={},{},{})",
                w.i, w.klm[0], w.klm[1], w.klm[2]
            ),
            other => f.write_str(other.label()),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Filter {
    /// Every component; all-even tuples appear with both `eps = 0` and `eps = 1`.
    All,
    /// Drop 2-divisible tuples.
    NonTwoDivisible,
}

/// All valid tuples of square `2g - 2`, sorted by `(a0, a1..a7, a9, a10, eps)`.
pub fn enumerate_components(g: i64, filter: Filter) -> Vec<FundamentalCoefficients> {
    if g < 2 {
        return Vec::new();
    }
    enumerate_with_bound(g, g - 1, filter)
}

/// Same, for every genus in `lo..=hi`, in genus order.
pub fn enumerate_range(lo: i64, hi: i64, filter: Filter) -> Vec<FundamentalCoefficients> {
    let per_genus: Vec<Vec<FundamentalCoefficients>> = (lo.max(2)..=hi)
        .into_par_iter()
        .map(|g| enumerate_components(g, filter))
        .collect();
    per_genus.into_iter().flatten().collect()
}

/// Depth-first search with every coefficient capped at `bound`. The square
/// only grows with each coefficient, which drives the pruning.
pub(crate) fn enumerate_with_bound(g: i64, bound: i64, filter: Filter) -> Vec<FundamentalCoefficients> {
    let target = 2 * g - 2;
    let mut out = Vec::new();
    for a9 in 0..=bound {
        for a10 in 0..=a9 {
            for a0 in a9..=(a9 + a10).min(bound) {
                let base = 2 * a9 * a10 + 4 * a0 * (a9 + a10);
                if base > target {
                    break;
                }
                let mut mid = [0i64; 7];
                descend(&mut mid, 0, bound, base, a9 + a10, a0, target, &mut |mid| {
                    let fc = FundamentalCoefficients::new(a0, *mid, a9, a10, 0);
                    let even = fc.is_two_divisible();
                    match (filter, even) {
                        (Filter::NonTwoDivisible, true) => {}
                        (Filter::All, true) => {
                            out.push(fc);
                            out.push(fc.with_eps(1));
                        }
                        (_, false) => out.push(fc),
                    }
                });
            }
        }
    }
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn descend(
    mid: &mut [i64; 7],
    pos: usize,
    cap: i64,
    square: i64,
    s_sum: i64,
    a0: i64,
    target: i64,
    emit: &mut impl FnMut(&[i64; 7]),
) {
    if pos == 7 {
        if square == target {
            emit(mid);
        }
        return;
    }
    for v in 0..=cap {
        let sq = square + 2 * v * s_sum + 2 * a0 * v;
        if sq > target {
            break;
        }
        mid[pos] = v;
        descend(mid, pos + 1, v, sq, s_sum + v, a0, target, emit);
    }
    mid[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::iso_pair;

    fn fc(entries: &[(u8, i64)]) -> FundamentalCoefficients {
        FundamentalCoefficients::with(entries)
    }

    #[test]
    fn validation_examples() {
        assert!(fc(&[(0, 1), (9, 1)]).validate().is_ok());
        let v = fc(&[(0, 2)]).violations();
        assert!(v.contains(&Violation::A0AboveA9PlusA10));
        let v = fc(&[(1, 1), (2, 2)]).violations();
        assert!(v.contains(&Violation::NotDecreasing(1)));
        assert!(fc(&[(1, 1), (2, 1)]).with_eps(1).violations().contains(&Violation::EpsWithOddCoefficient));
        assert!(fc(&[(1, 3)]).violations().contains(&Violation::NonPositiveSquare(0)));
    }

    #[test]
    fn square_and_genus_examples() {
        let a = fc(&[(1, 1), (2, 1)]);
        assert_eq!((a.square(), a.genus()), (2, 2));
        let b = fc(&[(0, 1), (9, 1)]);
        assert_eq!((b.square(), b.genus()), (4, 3));
        let c = fc(&[(0, 3), (1, 2), (2, 2), (3, 2), (9, 2), (10, 2)]);
        assert_eq!(c.square(), iso_pair(&c.to_iso_expr(), &c.to_iso_expr()));
        assert_eq!((c.square(), c.genus()), (164, 83));
    }

    #[test]
    fn iso_expr_examples() {
        assert_eq!(fc(&[(9, 1)]).to_iso_expr(), IsoExpr::generator(Generator::E(9)));
        assert!(fc(&[(0, 1)]).validate().is_err());
        let d = fc(&[(0, 1), (9, 1), (10, 1)]).to_iso_expr();
        assert_eq!(d.to_string(), "E9+E10+E9.10");
        assert_eq!(d.square(), 10);
    }

    #[test]
    fn parity_examples() {
        assert!(fc(&[(1, 2), (2, 2)]).is_two_divisible());
        assert!(!fc(&[(1, 1)]).is_two_divisible());
        assert!(fc(&[(0, 2), (9, 2)]).is_two_divisible());
    }

    #[test]
    fn trichotomy_examples() {
        let all_ones = fc(&(1..=7).map(|i| (i, 1)).collect::<Vec<_>>());
        match all_ones.trichotomy().unwrap() {
            TrichotomyCase::CaseI(w) => {
                assert_eq!(w, Witness { i: 9, klm: [1, 2, 3] });
            }
            other => panic!("{other}"),
        }
        let two = fc(&[(0, 3), (1, 2), (9, 2), (10, 2)]);
        assert_eq!(two.trichotomy().unwrap(), TrichotomyCase::CaseII);
        let mut entries: Vec<(u8, i64)> = (1..=7).map(|i| (i, 1)).collect();
        entries.extend([(0, 1), (9, 1), (10, 1)]);
        assert_eq!(fc(&entries).trichotomy().unwrap(), TrichotomyCase::CaseIII);
        assert_eq!(fc(&[(1, 2), (2, 2)]).trichotomy(), Err(ModuliError::TwoDivisible));
    }

    #[test]
    fn witness_minimality_prefers_small_triples() {
        // a1 = 5 odd; the cheapest odd total avoids it if possible.
        let t = fc(&[(1, 5), (2, 2), (3, 1), (4, 1)]);
        let w = t.case_one_witness().unwrap();
        // triples with odd sum: {3,5,6} -> 1 is minimal.
        assert_eq!(w, Witness { i: 9, klm: [3, 5, 6] });
    }

    #[test]
    fn enumeration_examples() {
        let g2 = enumerate_components(2, Filter::All);
        assert!(g2.contains(&fc(&[(1, 1), (2, 1)])));
        assert!(!g2.contains(&fc(&[(0, 1), (9, 1)])));
        let g3 = enumerate_components(3, Filter::All);
        assert!(g3.contains(&fc(&[(0, 1), (9, 1)])));
        for g in 2..=20 {
            for t in enumerate_components(g, Filter::All) {
                assert!(t.validate().is_ok(), "{t}");
                assert_eq!(t.square(), 2 * g - 2);
            }
        }
    }

    #[test]
    fn eps_doubling_of_even_tuples() {
        let all = enumerate_components(5, Filter::All);
        let even = fc(&[(1, 2), (2, 2)]);
        assert!(all.contains(&even));
        assert!(all.contains(&even.with_eps(1)));
        let odd_only = enumerate_components(5, Filter::NonTwoDivisible);
        assert!(!odd_only.contains(&even));
        assert!(odd_only.iter().all(|t| !t.is_two_divisible() && t.eps() == 0));
    }

    /// Naive oracle: every tuple with entries in `0..=g-1`, filtered by the constraints.
    fn naive(g: i64) -> Vec<FundamentalCoefficients> {
        let b = g as usize;
        let mut out = Vec::new();
        let total = b.pow(10);
        for mut code in 0..total {
            let mut v = [0i64; 10];
            for x in v.iter_mut() {
                *x = (code % b) as i64;
                code /= b;
            }
            let t = FundamentalCoefficients { coeffs: v, eps: 0 };
            if t.validate().is_ok() && t.square() == 2 * g - 2 {
                out.push(t);
                if t.is_two_divisible() {
                    out.push(t.with_eps(1));
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_naive_oracle() {
        for g in 2..=4 {
            assert_eq!(enumerate_components(g, Filter::All), naive(g), "g = {g}");
        }
    }

    #[test]
    fn doubled_bound_finds_nothing_new() {
        for g in 2..=30 {
            assert_eq!(
                enumerate_with_bound(g, 2 * (g - 1), Filter::All),
                enumerate_components(g, Filter::All),
                "g = {g}"
            );
        }
    }

    #[test]
    fn range_enumeration_concatenates_genera() {
        let r = enumerate_range(2, 6, Filter::NonTwoDivisible);
        let manual: Vec<_> = (2..=6).flat_map(|g| enumerate_components(g, Filter::NonTwoDivisible)).collect();
        assert_eq!(r, manual);
    }

    #[test]
    fn from_slice_round_trip() {
        let t = FundamentalCoefficients::from_slice(&[1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 0]).unwrap();
        assert_eq!(t.to_vec(), vec![1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 0]);
        assert!(FundamentalCoefficients::from_slice(&[1, 2]).is_err());
        assert!(FundamentalCoefficients::from_slice(&[0; 10].iter().copied().chain([2]).collect::<Vec<_>>()).is_err());
    }
}
