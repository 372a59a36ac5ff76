use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{DispatchError, ModuliError};
use crate::lattice::{restrict, DivClass, Generator, IsoExpr, Surface};
use crate::moduli::{FundamentalCoefficients, TrichotomyCase, Witness};

use super::checks::{common_checks, verify_explicit, verify_metodo1, verify_metodo2, Checklist};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    S71,
    S721,
    S722,
    S73,
    #[serde(rename = "S74_L34")]
    S74L34,
    #[serde(rename = "S74_L2")]
    S74L2,
    #[serde(rename = "S75_C70")]
    S75C70,
    #[serde(rename = "S75_C7P")]
    S75C7P,
    S76,
}

impl CaseId {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseId::S71 => "S71",
            CaseId::S721 => "S721",
            CaseId::S722 => "S722",
            CaseId::S73 => "S73",
            CaseId::S74L34 => "S74_L34",
            CaseId::S74L2 => "S74_L2",
            CaseId::S75C70 => "S75_C70",
            CaseId::S75C7P => "S75_C7P",
            CaseId::S76 => "S76",
        }
    }

    pub fn route(&self) -> Route {
        match self {
            CaseId::S71 | CaseId::S721 => Route::Explicit,
            CaseId::S76 => Route::Metodo2,
            _ => Route::Metodo1,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the plan is certified.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    /// An explicit curve on the limit surface; no gluing criterion needed.
    Explicit,
    /// The general gluing criterion, with `k <= 3` matched (-1)-curves.
    Metodo1,
    /// The variant with `s = 4`, `t = 5`, `k = 3` and two extra curves of
    /// distinct degree.
    Metodo2,
}

/// Fundamental coefficient `a_source` placed in slot `c_slot`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotAssignment {
    pub source: u8,
    pub slot: u8,
    pub value: i64,
}

/// The components of the explicit curve used when no criterion is needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitCurve {
    pub r_components: Vec<DivClass>,
    pub p_components: Vec<DivClass>,
    pub expected_genus: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitPlan {
    pub source: FundamentalCoefficients,
    pub case_id: CaseId,
    pub s: usize,
    pub t: usize,
    pub k: usize,
    pub kappa: Option<usize>,
    pub lambda: Option<usize>,
    pub renamed: Vec<SlotAssignment>,
    /// `L` as a combination of the limit isotropic generators.
    pub l_iso: IsoExpr,
    /// Limit-surface labels of the exceptionals of `R(s)`, in local order.
    pub r_labels: Vec<u8>,
    /// Limit-surface labels of the exceptionals of `P(t)`, in local order.
    pub p_labels: Vec<u8>,
    pub lp: DivClass,
    pub lpp: DivClass,
    pub lp0: DivClass,
    pub lpp0: DivClass,
    pub c_list: Vec<DivClass>,
    pub d_list: Vec<DivClass>,
    pub extra_d: Vec<DivClass>,
    /// `L'_0.T - 3`; absent on the explicit route.
    pub m: Option<i64>,
    pub explicit: Option<ExplicitCurve>,
    pub checklist: Checklist,
}

impl LimitPlan {
    pub fn route(&self) -> Route {
        self.case_id.route()
    }

    pub fn verified(&self) -> bool {
        self.checklist.all_pass()
    }

    /// Original labels of the exceptionals, e.g. `R: e2,e3; P: e5..e9`.
    pub fn provenance(&self) -> String {
        let list = |v: &[u8]| {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter().map(|l| format!("e{l}")).collect::<Vec<_>>().join(",")
            }
        };
        format!("R: {}; P: {}", list(&self.r_labels), list(&self.p_labels))
    }
}

/// Builds classes on `R(s)` and `P(t)` by limit-surface label.
struct Frame {
    r: Vec<u8>,
    p: Vec<u8>,
}

impl Frame {
    fn new(r: Vec<u8>, p: Vec<u8>) -> Self {
        Frame { r, p }
    }

    fn local(labels: &[u8], label: u8) -> usize {
        labels
            .iter()
            .position(|&l| l == label)
            .unwrap_or_else(|| panic!("e{label} is not blown up in this plan"))
    }

    /// `alpha s + beta f - sum gamma e_label`.
    fn r(&self, alpha: i64, beta: i64, gammas: &[(u8, i64)]) -> DivClass {
        let mut g = vec![0; self.r.len()];
        for &(label, v) in gammas {
            g[Self::local(&self.r, label)] += v;
        }
        DivClass::on_r(alpha, beta, &g)
    }

    /// `d l - sum m e_label`.
    fn p(&self, d: i64, mults: &[(u8, i64)]) -> DivClass {
        let mut m = vec![0; self.p.len()];
        for &(label, v) in mults {
            m[Self::local(&self.p, label)] += v;
        }
        DivClass::on_p(d, &m)
    }

    fn pe(&self, label: u8) -> DivClass {
        self.p(0, &[(label, -1)])
    }

    /// The other component `f - e_label` of a reducible fibre.
    fn fe(&self, label: u8) -> DivClass {
        self.r(0, 1, &[(label, 1)])
    }

    /// `l - sum e_label`.
    fn line_through(&self, labels: &[u8]) -> DivClass {
        let m: Vec<(u8, i64)> = labels.iter().map(|&l| (l, 1)).collect();
        self.p(1, &m)
    }

    /// `2l - e5 - e6 - e7 - e8`.
    fn conic(&self) -> DivClass {
        self.p(2, &[(5, 1), (6, 1), (7, 1), (8, 1)])
    }

    fn r_surface(&self) -> Surface {
        Surface::r(self.r.len())
    }

    fn p_surface(&self) -> Surface {
        Surface::p(self.p.len())
    }
}

/// Sum of `coeff * class` on a common surface.
fn combo(surface: Surface, terms: &[(i64, DivClass)]) -> DivClass {
    terms
        .iter()
        .fold(DivClass::zero(surface), |acc, (c, d)| acc + d.scaled(*c))
}

struct Draft {
    case_id: CaseId,
    s: usize,
    t: usize,
    k: usize,
    kappa: Option<usize>,
    lambda: Option<usize>,
    renamed: Vec<SlotAssignment>,
    l_iso: IsoExpr,
    frame: Frame,
    lp0: DivClass,
    lpp0: DivClass,
    c_list: Vec<DivClass>,
    d_list: Vec<DivClass>,
    extra_d: Vec<DivClass>,
    explicit: Option<ExplicitCurve>,
}

/// Build the limit plan for a valid, `eps = 0`, non-2-divisible tuple and
/// evaluate its checklist.
///
/// Checklist failures are reported in the plan. Errors are reserved for
/// inputs outside the theorem and for violations of facts the construction
/// relies on as proved.
pub fn dispatch(fc: &FundamentalCoefficients) -> Result<LimitPlan, DispatchError> {
    if let Err(v) = fc.validate() {
        let msg = v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ");
        return Err(ModuliError::Invalid(msg).into());
    }
    if fc.eps() != 0 {
        return Err(ModuliError::EpsOne.into());
    }
    if fc.is_two_divisible() {
        return Err(ModuliError::TwoDivisible.into());
    }
    let a = |i: u8| fc.a(i);
    let zero_except = |keep: &[u8]| {
        [0u8, 1, 2, 3, 4, 5, 6, 7, 9, 10]
            .iter()
            .all(|i| keep.contains(i) || a(*i) == 0)
    };

    let draft = if zero_except(&[1, 2]) && a(1) == 1 && a(2) == 1 {
        draft_s71(fc)
    } else if zero_except(&[0, 9]) && a(0) == a(9) && a(0) > 0 {
        if a(0) == 1 {
            draft_s721()
        } else {
            draft_s722(a(0))
        }
    } else if a(7) == 0 && a(9) == 0 && a(10) == 0 && a(0) == 0 {
        draft_s73(fc)
    } else {
        match fc.trichotomy()? {
            TrichotomyCase::CaseI(w) => draft_s74(fc, w)?,
            TrichotomyCase::CaseII => draft_s75(fc),
            TrichotomyCase::CaseIII => draft_s76(fc),
        }
    };
    finish(fc, draft)
}

fn finish(fc: &FundamentalCoefficients, d: Draft) -> Result<LimitPlan, DispatchError> {
    let x = restrict(&d.l_iso)?;
    let r_keep: Vec<usize> = d.frame.r.iter().map(|&l| l as usize).collect();
    let p_keep: Vec<usize> = d.frame.p.iter().map(|&l| l as usize - 4).collect();
    let lp = x.r_part().restrict_exceptionals(&r_keep)?;
    let lpp = x.p_part().restrict_exceptionals(&p_keep)?;
    let m = match d.case_id.route() {
        Route::Explicit => None,
        _ => Some(d.lp0.dot_t() - 3),
    };
    let mut plan = LimitPlan {
        source: *fc,
        case_id: d.case_id,
        s: d.s,
        t: d.t,
        k: d.k,
        kappa: d.kappa,
        lambda: d.lambda,
        renamed: d.renamed,
        l_iso: d.l_iso,
        r_labels: d.frame.r,
        p_labels: d.frame.p,
        lp,
        lpp,
        lp0: d.lp0,
        lpp0: d.lpp0,
        c_list: d.c_list,
        d_list: d.d_list,
        extra_d: d.extra_d,
        m,
        explicit: d.explicit,
        checklist: Checklist::default(),
    };
    let mut checklist = match plan.route() {
        Route::Explicit => verify_explicit(&plan),
        Route::Metodo1 => verify_metodo1(&plan),
        Route::Metodo2 => verify_metodo2(&plan),
    };
    checklist.extend(common_checks(&plan));
    plan.checklist = checklist;
    Ok(plan)
}

fn iso(terms: &[(i64, Generator)]) -> IsoExpr {
    IsoExpr::from_terms(terms.iter().copied())
}

fn slots(pairs: &[(u8, u8)], fc: &FundamentalCoefficients) -> Vec<SlotAssignment> {
    pairs
        .iter()
        .map(|&(source, slot)| SlotAssignment {
            source,
            slot,
            value: fc.a(source),
        })
        .collect()
}

/// `L = E8 + E9`: a fibre plus a section against a line through one point
/// plus an exceptional curve.
fn draft_s71(fc: &FundamentalCoefficients) -> Draft {
    let frame = Frame::new(vec![], vec![8, 9]);
    let (s, f) = (DivClass::section(0), DivClass::fibre(0));
    let r_components = vec![f, s];
    let p_components = vec![frame.line_through(&[8]), frame.pe(9)];
    explicit_draft(
        CaseId::S71,
        slots(&[(1, 8), (2, 9)], fc),
        iso(&[(1, Generator::E(8)), (1, Generator::E(9))]),
        frame,
        r_components,
        p_components,
        2,
    )
}

/// `L = E_{9,10} + E9`.
fn draft_s721() -> Draft {
    let frame = Frame::new(vec![], vec![9]);
    let r_components = vec![DivClass::fibre(0), DivClass::section(0)];
    let p_components = vec![frame.line_through(&[9]), frame.pe(9)];
    let renamed = vec![
        SlotAssignment { source: 0, slot: 0, value: 1 },
        SlotAssignment { source: 9, slot: 9, value: 1 },
    ];
    explicit_draft(
        CaseId::S721,
        renamed,
        iso(&[(1, Generator::Eij(9, 10)), (1, Generator::E(9))]),
        frame,
        r_components,
        p_components,
        3,
    )
}

fn explicit_draft(
    case_id: CaseId,
    renamed: Vec<SlotAssignment>,
    l_iso: IsoExpr,
    frame: Frame,
    r_components: Vec<DivClass>,
    p_components: Vec<DivClass>,
    expected_genus: i64,
) -> Draft {
    let lp0 = DivClass::sum(frame.r_surface(), &r_components).expect("components on R");
    let lpp0 = DivClass::sum(frame.p_surface(), &p_components).expect("components on P");
    Draft {
        case_id,
        s: frame.r.len(),
        t: frame.p.len(),
        k: 0,
        kappa: None,
        lambda: None,
        renamed,
        l_iso,
        frame,
        lp0,
        lpp0,
        c_list: vec![],
        d_list: vec![],
        extra_d: vec![],
        explicit: Some(ExplicitCurve {
            r_components,
            p_components,
            expected_genus,
        }),
    }
}

/// `L = c (E_{5,6} + E5)` with `c = a0 = a9 >= 3` odd.
fn draft_s722(c: i64) -> Draft {
    let frame = Frame::new(vec![], vec![5, 7, 8]);
    let lp0 = DivClass::on_r(c, c, &[]);
    let lpp0 = frame.p(2, &[(5, 1), (7, 1), (8, 1)]).scaled(c);
    let extra_d = vec![frame.pe(5), frame.pe(7), frame.pe(8)];
    Draft {
        case_id: CaseId::S722,
        s: 0,
        t: 3,
        k: 0,
        kappa: None,
        lambda: None,
        renamed: vec![
            SlotAssignment { source: 0, slot: 0, value: c },
            SlotAssignment { source: 9, slot: 5, value: c },
        ],
        l_iso: iso(&[(c, Generator::Eij(5, 6)), (c, Generator::E(5))]),
        frame,
        lp0,
        lpp0,
        c_list: vec![],
        d_list: vec![],
        extra_d,
        explicit: None,
    }
}

/// `a0 = a7 = a9 = a10 = 0`: the smallest odd coefficient goes to `c1`, the
/// other five to `c5, c6, c7, c8, c10` in non-increasing order.
fn draft_s73(fc: &FundamentalCoefficients) -> Draft {
    let odd = (1..=6u8)
        .filter(|&i| fc.a(i) % 2 == 1)
        .min_by_key(|&i| (fc.a(i), i))
        .expect("a non-2-divisible tuple has an odd coefficient");
    let rest: Vec<u8> = (1..=6u8).filter(|&i| i != odd).collect();
    let targets = [5u8, 6, 7, 8, 10];
    let mut pairs = vec![(odd, 1u8)];
    pairs.extend(rest.iter().copied().zip(targets));
    let renamed = slots(&pairs, fc);
    let c = |slot: u8| renamed.iter().find(|x| x.slot == slot).map_or(0, |x| x.value);

    if c(5) == 1 && [6, 7, 8, 10].iter().all(|&j| c(j) == 0) {
        // Only reachable for a1 = a2 = 1, which is caught earlier.
        return draft_s71(fc);
    }

    let mut terms = vec![(c(1), Generator::E(1))];
    for j in [5u8, 6, 7, 8] {
        terms.push((c(j), Generator::E(j)));
    }
    terms.push((c(10), Generator::E(10)));

    let frame = Frame::new(vec![1], vec![5, 6, 7, 8]);
    let fibres = c(5) + c(6) + c(7) + c(8) + c(10);
    let lp0 = frame.r(c(1), fibres, &[(1, c(1))]);
    let mut lpp_terms: Vec<(i64, DivClass)> = [5u8, 6, 7, 8]
        .iter()
        .map(|&j| (c(j), frame.line_through(&[j])))
        .collect();
    lpp_terms.push((c(10), frame.conic()));
    let lpp0 = combo(frame.p_surface(), &lpp_terms);
    let extra_d = [5, 6, 7, 8].iter().map(|&j| frame.pe(j)).collect();
    Draft {
        case_id: CaseId::S73,
        s: 1,
        t: 4,
        k: 0,
        kappa: None,
        lambda: None,
        renamed,
        l_iso: iso(&terms),
        frame,
        lp0,
        lpp0,
        c_list: vec![],
        d_list: vec![],
        extra_d,
        explicit: None,
    }
}

/// The `P`-side terms shared by the cases built on `E_{9,10}`:
/// `(c0 - c9)(l - e9) + c9 l + c10 (2l - e5 - e6 - e7 - e8)`.
fn p_base_9_10(frame: &Frame, c0: i64, c9: i64, c10: i64) -> Vec<(i64, DivClass)> {
    vec![
        (c0 - c9, frame.line_through(&[9])),
        (c9, frame.p(1, &[])),
        (c10, frame.conic()),
    ]
}

/// Case (i): an odd `a_i + a_k + a_l + a_m` with `i in {9, 10}`.
fn draft_s74(fc: &FundamentalCoefficients, w: Witness) -> Result<Draft, DispatchError> {
    let other = if w.i == 9 { 10 } else { 9 };
    let rest: Vec<u8> = (1..=7u8).filter(|j| !w.klm.contains(j)).collect();
    let mut pairs = vec![(0u8, 0u8), (w.i, 9), (other, 10)];
    pairs.extend(w.klm.iter().copied().zip([2u8, 3, 4]));
    pairs.extend(rest.iter().copied().zip([5u8, 6, 7, 8]));
    let renamed = slots(&pairs, fc);
    let cv: [i64; 11] = {
        let mut v = [0; 11];
        for x in &renamed {
            v[x.slot as usize] = x.value;
        }
        v
    };
    let c = |j: usize| cv[j];
    let kappa = (2..=4).filter(|&j| c(j) > 0).count();
    let lambda = (5..=8).filter(|&j| c(j) > 0).count();

    let violated = |what: &str| DispatchError::ClaimViolated {
        tuple: fc.to_string(),
        what: what.to_string(),
    };
    if c(0) == 0 && (kappa, lambda) != (3, 4) {
        return Err(violated("c0 = 0 must force (kappa, lambda) = (3, 4)"));
    }
    if lambda <= 2 && kappa > 1 {
        return Err(violated("lambda <= 2 must force kappa <= 1"));
    }
    if lambda <= 2 && kappa == 1 && c(10) < 2 {
        return Err(violated("lambda <= 2 and kappa = 1 must force c10 >= 2"));
    }
    if (kappa, lambda, c(10)) == (0, 0, 0) && c(0) == c(9) {
        return Err(violated("(kappa, lambda, c10) = (0, 0, 0) must force c0 != c9"));
    }

    let mut terms = vec![
        (c(0), Generator::Eij(9, 10)),
        (c(9), Generator::E(9)),
        (c(10), Generator::E(10)),
    ];
    for j in 2..=8u8 {
        terms.push((c(j as usize), Generator::E(j)));
    }

    let r_labels: Vec<u8> = (2..2 + kappa as u8).collect();
    let frame = Frame::new(r_labels.clone(), vec![5, 6, 7, 8, 9]);
    let alpha = c(2) + c(3) + c(4) + c(9);
    let beta = c(0) + c(5) + c(6) + c(7) + c(8) + c(10) - kappa as i64;
    let gammas: Vec<(u8, i64)> = r_labels.iter().map(|&j| (j, c(j as usize) - 1)).collect();
    let lp0 = frame.r(alpha, beta, &gammas);
    let c_list: Vec<DivClass> = r_labels.iter().map(|&j| frame.fe(j)).collect();

    let mut base = p_base_9_10(&frame, c(0), c(9), c(10));
    let (case_id, lpp0, d_list, extra_d) = if lambda >= 3 {
        for j in 5..=7u8 {
            base.push((c(j as usize) - 1, frame.line_through(&[j])));
        }
        base.push((c(8), frame.line_through(&[8])));
        for pair in [[5u8, 6], [6, 7], [7, 8]] {
            base.push((1, frame.line_through(&pair)));
        }
        let l03 = combo(frame.p_surface(), &base);
        let tail = [6u8, 7, 8];
        let (added, matched) = tail.split_at(3 - kappa);
        let lpp0 = added.iter().fold(l03, |acc, &j| acc + frame.pe(j));
        let d_list = matched.iter().map(|&j| frame.pe(j)).collect();
        let mut extra: Vec<u8> = vec![5];
        extra.extend_from_slice(added);
        extra.push(9);
        let extra_d = extra.iter().map(|&j| frame.pe(j)).collect();
        (CaseId::S74L34, lpp0, d_list, extra_d)
    } else if kappa == 0 {
        for j in 5..=8u8 {
            base.push((c(j as usize), frame.line_through(&[j])));
        }
        let lpp0 = combo(frame.p_surface(), &base);
        let extra_d = [5, 6, 7, 8, 9].iter().map(|&j| frame.pe(j)).collect();
        (CaseId::S74L2, lpp0, vec![], extra_d)
    } else {
        let mut terms_p = vec![
            (c(0) - c(9), frame.line_through(&[9])),
            (c(9), frame.p(1, &[])),
            (c(10) - 1, frame.conic()),
        ];
        for j in 5..=6u8 {
            terms_p.push((c(j as usize), frame.line_through(&[j])));
        }
        terms_p.push((1, frame.p(2, &[(5, 1), (6, 1), (7, 1), (8, 1), (9, 1)])));
        let lpp0 = combo(frame.p_surface(), &terms_p);
        let extra_d = [5, 6, 7, 8].iter().map(|&j| frame.pe(j)).collect();
        (CaseId::S74L2, lpp0, vec![frame.pe(9)], extra_d)
    };

    Ok(Draft {
        case_id,
        s: kappa,
        t: 5,
        k: kappa,
        kappa: Some(kappa),
        lambda: Some(lambda),
        renamed,
        l_iso: iso(&terms),
        frame,
        lp0,
        lpp0,
        c_list,
        d_list,
        extra_d,
        explicit: None,
    })
}

/// Case (ii): `a0` odd, everything else even.
fn draft_s75(fc: &FundamentalCoefficients) -> Draft {
    // a1 >= ... >= a7 fill c10 >= c8 >= c7 >= c1 >= c2 >= c3 >= c4.
    let pairs = [
        (0u8, 0u8),
        (9, 5),
        (10, 6),
        (1, 10),
        (2, 8),
        (3, 7),
        (4, 1),
        (5, 2),
        (6, 3),
        (7, 4),
    ];
    let renamed = slots(&pairs, fc);
    let mut cv = [0i64; 11];
    for x in &renamed {
        cv[x.slot as usize] = x.value;
    }
    let c = |j: usize| cv[j];
    let kappa = (1..=4).filter(|&j| c(j) > 0).count();
    let k = kappa.saturating_sub(1);

    let mut terms = vec![(c(0), Generator::Eij(5, 6))];
    for j in 1..=8u8 {
        terms.push((c(j as usize), Generator::E(j)));
    }
    terms.push((c(10), Generator::E(10)));

    let r_labels: Vec<u8> = (1..=kappa as u8).collect();
    let frame = Frame::new(r_labels.clone(), vec![5, 6, 7, 8]);
    let alpha = c(0) + c(1) + c(2) + c(3) + c(4);
    // The fibre count drops by one per matched curve f - e_i, i >= 2.
    let beta = c(5) + c(6) + c(7) + c(8) + c(10) - k as i64;
    let gammas: Vec<(u8, i64)> = r_labels
        .iter()
        .map(|&j| (j, if j == 1 { c(1) } else { c(j as usize) - 1 }))
        .collect();
    let lp0 = frame.r(alpha, beta, &gammas);
    let c_list: Vec<DivClass> = r_labels.iter().filter(|&&j| j >= 2).map(|&j| frame.fe(j)).collect();

    let (case_id, lpp0, d_list, extra_d) = if c(7) == 0 {
        let mut t = vec![(c(0), frame.line_through(&[7, 8]))];
        for j in 5..=8u8 {
            t.push((c(j as usize), frame.line_through(&[j])));
        }
        t.push((c(10), frame.conic()));
        let lpp0 = combo(frame.p_surface(), &t);
        let extra_d = [5, 6, 7, 8].iter().map(|&j| frame.pe(j)).collect();
        (CaseId::S75C70, lpp0, vec![], extra_d)
    } else {
        let mut t = vec![
            (c(0), frame.line_through(&[7, 8])),
            (c(5), frame.line_through(&[5])),
        ];
        for j in 6..=8u8 {
            t.push((c(j as usize) - 1, frame.line_through(&[j])));
        }
        t.push((c(10), frame.conic()));
        for pair in [[6u8, 7], [7, 5], [8, 6]] {
            t.push((1, frame.line_through(&pair)));
        }
        let l3 = combo(frame.p_surface(), &t);
        let head = [5u8, 6, 7];
        let (added, matched) = head.split_at(3 - k);
        let lpp0 = added.iter().fold(l3, |acc, &j| acc + frame.pe(j));
        let d_list = matched.iter().map(|&j| frame.pe(j)).collect();
        let mut extra: Vec<u8> = added.to_vec();
        extra.push(8);
        let extra_d = extra.iter().map(|&j| frame.pe(j)).collect();
        (CaseId::S75C7P, lpp0, d_list, extra_d)
    };

    Draft {
        case_id,
        s: kappa,
        t: 4,
        k,
        kappa: Some(kappa),
        lambda: None,
        renamed,
        l_iso: iso(&terms),
        frame,
        lp0,
        lpp0,
        c_list,
        d_list,
        extra_d,
        explicit: None,
    }
}

/// Case (iii): `a0 > 0` and everything else odd.
fn draft_s76(fc: &FundamentalCoefficients) -> Draft {
    // a1 >= ... >= a7 fill c7 >= ... >= c1.
    let mut pairs = vec![(0u8, 0u8), (9, 9), (10, 10)];
    pairs.extend((1..=7u8).map(|i| (i, 8 - i)));
    let renamed = slots(&pairs, fc);
    let mut cv = [0i64; 11];
    for x in &renamed {
        cv[x.slot as usize] = x.value;
    }
    let c = |j: usize| cv[j];

    let mut terms = vec![
        (c(0), Generator::Eij(9, 10)),
        (c(9), Generator::E(9)),
        (c(10), Generator::E(10)),
    ];
    for j in 1..=7u8 {
        terms.push((c(j as usize), Generator::E(j)));
    }

    let frame = Frame::new(vec![1, 2, 3, 4], vec![5, 6, 7, 8, 9]);
    let alpha = c(1) + c(2) + c(3) + c(4) + c(9);
    let beta = c(0) + c(5) + c(6) + c(7) + c(10) - 3;
    let lp0 = frame.r(
        alpha,
        beta,
        &[(1, c(1)), (2, c(2) - 1), (3, c(3) - 1), (4, c(4) - 1)],
    );
    let c_list = [2u8, 3, 4].iter().map(|&j| frame.fe(j)).collect();

    let mut t = p_base_9_10(&frame, c(0), c(9), c(10));
    for j in 5..=7u8 {
        t.push((c(j as usize) - 1, frame.line_through(&[j])));
    }
    for pair in [[5u8, 6], [6, 7], [7, 8]] {
        t.push((1, frame.line_through(&pair)));
    }
    let lpp0 = combo(frame.p_surface(), &t);
    let d_list = [6u8, 7, 8].iter().map(|&j| frame.pe(j)).collect();
    let extra_d = vec![frame.pe(5), frame.pe(9)];

    Draft {
        case_id: CaseId::S76,
        s: 4,
        t: 5,
        k: 3,
        kappa: None,
        lambda: None,
        renamed,
        l_iso: iso(&terms),
        frame,
        lp0,
        lpp0,
        c_list,
        d_list,
        extra_d,
        explicit: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fc(entries: &[(u8, i64)]) -> FundamentalCoefficients {
        FundamentalCoefficients::with(entries)
    }

    #[test]
    fn genus_two_special_case() {
        let plan = dispatch(&fc(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(plan.case_id, CaseId::S71);
        assert_eq!(plan.lp.to_string(), "s+f");
        assert_eq!(plan.lpp.to_string(), "l-e1+e2");
        assert!(plan.verified(), "{:#?}", plan.checklist);
        assert_eq!(plan.provenance(), "R: -; P: e8,e9");
    }

    #[test]
    fn genus_three_special_case() {
        let plan = dispatch(&fc(&[(0, 1), (9, 1)])).unwrap();
        assert_eq!(plan.case_id, CaseId::S721);
        assert_eq!(plan.lpp.to_string(), "l");
        assert!(plan.verified());
    }

    #[test]
    fn a0_equals_a9_three() {
        let plan = dispatch(&fc(&[(0, 3), (9, 3)])).unwrap();
        assert_eq!(plan.case_id, CaseId::S722);
        assert_eq!(plan.lp, DivClass::on_r(3, 3, &[]));
        assert_eq!(plan.lpp, DivClass::on_p(6, &[3, 3, 3]));
        assert_eq!(plan.m, Some(6));
        assert!(plan.verified(), "{:#?}", plan.checklist);
    }

    #[test]
    fn all_odd_goes_to_case_iii() {
        let mut e: Vec<(u8, i64)> = (1..=7).map(|i| (i, 1)).collect();
        e.extend([(0, 1), (9, 1), (10, 1)]);
        let plan = dispatch(&fc(&e)).unwrap();
        assert_eq!(plan.case_id, CaseId::S76);
        let e5 = &plan.extra_d[0];
        let e9 = &plan.extra_d[1];
        let v5 = crate::lattice::pair(&plan.lpp0, e5).unwrap();
        let v9 = crate::lattice::pair(&plan.lpp0, e9).unwrap();
        assert_eq!((v5, v9), (2, 0));
        assert!(plan.verified(), "{:#?}", plan.checklist);
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            dispatch(&fc(&[(1, 2), (2, 2)])),
            Err(DispatchError::OutOfTheorem(ModuliError::TwoDivisible))
        ));
        assert!(matches!(
            dispatch(&fc(&[(1, 2), (2, 2)]).with_eps(1)),
            Err(DispatchError::OutOfTheorem(ModuliError::EpsOne))
        ));
        assert!(matches!(
            dispatch(&fc(&[(0, 2)])),
            Err(DispatchError::OutOfTheorem(ModuliError::Invalid(_)))
        ));
    }

    #[test]
    fn case_three_smallest_odd_goes_first() {
        let plan = dispatch(&fc(&[(1, 1), (2, 1), (3, 1)])).unwrap();
        assert_eq!(plan.case_id, CaseId::S73);
        assert_eq!(plan.renamed[0], SlotAssignment { source: 1, slot: 1, value: 1 });
        assert!(plan.verified(), "{:#?}", plan.checklist);
    }

    #[test]
    fn decompositions_hold_by_construction() {
        for t in crate::moduli::enumerate_range(2, 20, crate::moduli::Filter::NonTwoDivisible) {
            let Ok(plan) = dispatch(&t) else { continue };
            let c_sum = DivClass::sum(plan.lp.surface(), &plan.c_list).unwrap();
            let d_sum = DivClass::sum(plan.lpp.surface(), &plan.d_list).unwrap();
            if plan.route() != Route::Explicit {
                assert_eq!(&plan.lp0 + &c_sum, plan.lp, "{t} {}", plan.case_id);
                assert_eq!(&plan.lpp0 + &d_sum, plan.lpp, "{t} {}", plan.case_id);
            }
        }
    }
}
