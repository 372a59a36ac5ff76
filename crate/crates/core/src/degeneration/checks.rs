use serde::{Deserialize, Serialize};

use crate::lattice::{pair, DivClass, XClass};
use crate::positivity::{are_pairwise_disjoint, condition_star, is_big_and_nef_p, is_minus_one, is_odd, nef_obstruction};

use super::ledger::plan_ledger;
use super::plan::{CaseId, LimitPlan, Route};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Checklist(pub Vec<Check>);

impl Checklist {
    fn push(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Checklist) {
        self.0.extend(other.0);
    }

    pub fn all_pass(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.0.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.0.iter().find(|c| c.name == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Check> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn list(cs: &[DivClass]) -> String {
    if cs.is_empty() {
        return "none".to_string();
    }
    cs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

/// Every class is a (-1)-class meeting `T` once, and they are pairwise disjoint.
fn disjoint_minus_ones(cs: &[DivClass]) -> (bool, String) {
    if let Some(bad) = cs.iter().find(|c| !is_minus_one(c)) {
        return (false, format!("{bad} is not a (-1)-class"));
    }
    if let Some(bad) = cs.iter().find(|c| c.dot_t() != 1) {
        return (false, format!("{bad} meets T in degree {}", bad.dot_t()));
    }
    match are_pairwise_disjoint(cs) {
        Ok(true) => (true, list(cs)),
        Ok(false) => (false, format!("not pairwise disjoint: {}", list(cs))),
        Err(e) => (false, e.to_string()),
    }
}

fn decomposition(name: &str, out: &mut Checklist, total: &DivClass, base: &DivClass, parts: &[DivClass]) {
    let sum = DivClass::sum(total.surface(), parts).and_then(|s| s.checked_add(base));
    match sum {
        Ok(s) if &s == total => out.push(name, true, format!("{total} = {base} + [{}]", list(parts))),
        Ok(s) => out.push(name, false, format!("{total} != {s}")),
        Err(e) => out.push(name, false, e.to_string()),
    }
}

fn star_and_odd(out: &mut Checklist, prefix: &str, lp0: &DivClass) {
    match condition_star(lp0) {
        Ok(r) => {
            let detail = match r.first_failure() {
                None => format!("{lp0}: -L.K = {}", r.minus_l_dot_k),
                Some(f) => format!("{lp0} fails {f}"),
            };
            out.push(&format!("{prefix} L'0 satisfies (*)"), r.holds, detail);
        }
        Err(e) => out.push(&format!("{prefix} L'0 satisfies (*)"), false, e.to_string()),
    }
    match is_odd(lp0) {
        Ok(odd) => out.push(&format!("{prefix} L'0 odd"), odd, format!("L'0.f = {}", lp0.leading())),
        Err(e) => out.push(&format!("{prefix} L'0 odd"), false, e.to_string()),
    }
}

fn big_and_nef(out: &mut Checklist, prefix: &str, lpp0: &DivClass) {
    let name = format!("{prefix} L''0 big and nef");
    match (is_big_and_nef_p(lpp0), nef_obstruction(lpp0)) {
        (Ok(true), _) => out.push(&name, true, format!("{lpp0}: square {}", lpp0.square())),
        (Ok(false), Ok(Some(e))) => out.push(&name, false, format!("{lpp0}: negative on {e}")),
        (Ok(false), _) => out.push(&name, false, format!("{lpp0}: square {} <= 0", lpp0.square())),
        (Err(e), _) => out.push(&name, false, e.to_string()),
    }
}

fn tangency(out: &mut Checklist, plan: &LimitPlan) {
    let (r, p) = (plan.lp0.dot_t() - 3, plan.lpp0.dot_t() - 3);
    out.push("m agrees on both sides", r == p, format!("L'0.T - 3 = {r}, L''0.T - 3 = {p}"));
    out.push("m >= 1", r >= 1, format!("m = {r}"));
}

fn cartier(out: &mut Checklist, name: &str, plan: &LimitPlan) {
    let (r, p) = (plan.lp.dot_t(), plan.lpp.dot_t());
    out.push(name, r == p, format!("L'.T = {r}, L''.T = {p}"));
}

fn count(out: &mut Checklist, name: &str, got: usize, want: usize) {
    out.push(name, got == want, format!("{got} curves, need {want}"));
}

/// Extra curves: pairwise disjoint (-1)-curves, disjoint from `D_i`.
fn extra_disjoint(plan: &LimitPlan) -> (bool, String) {
    let (ok, detail) = disjoint_minus_ones(&plan.extra_d);
    if !ok {
        return (false, detail);
    }
    for x in &plan.extra_d {
        for d in &plan.d_list {
            if pair(x, d).unwrap_or(1) != 0 {
                return (false, format!("{x} meets {d}"));
            }
        }
    }
    (true, detail)
}

fn route_guard(out: &mut Checklist, plan: &LimitPlan, want: Route) {
    if plan.route() != want {
        out.push("route", false, format!("{} is not certified this way", plan.case_id));
    }
}

/// Hypotheses (i)-(v) of the gluing criterion with `k` matched (-1)-curves.
pub fn verify_metodo1(plan: &LimitPlan) -> Checklist {
    let mut out = Checklist::default();
    route_guard(&mut out, plan, Route::Metodo1);
    let (s, t, k) = (plan.s as i64, plan.t as i64, plan.k as i64);
    let upper = 3.min(s).min(t - 1);
    out.push(
        "(i) s+t-5 <= k <= min(3,s,t-1)",
        s + t - 5 <= k && k <= upper && t >= 1,
        format!("s = {s}, t = {t}: {} <= {k} <= {upper}", s + t - 5),
    );
    cartier(&mut out, "(ii) L'.T = L''.T", plan);

    decomposition("(iii) L' = L'0 + sum C", &mut out, &plan.lp, &plan.lp0, &plan.c_list);
    count(&mut out, "(iii) k curves C", plan.c_list.len(), plan.k);
    let (ok, d) = disjoint_minus_ones(&plan.c_list);
    out.push("(iii) C disjoint (-1)-curves", ok, d);
    star_and_odd(&mut out, "(iii)", &plan.lp0);

    decomposition("(iv) L'' = L''0 + sum D", &mut out, &plan.lpp, &plan.lpp0, &plan.d_list);
    count(&mut out, "(iv) k curves D", plan.d_list.len(), plan.k);
    let (ok, d) = disjoint_minus_ones(&plan.d_list);
    out.push("(iv) D disjoint (-1)-curves", ok, d);
    big_and_nef(&mut out, "(iv)", &plan.lpp0);

    count(&mut out, "(v) t-k extra curves", plan.extra_d.len(), plan.t.saturating_sub(plan.k));
    let (ok, d) = extra_disjoint(plan);
    out.push("(v) extra curves disjoint", ok, d);
    let degrees: Vec<i64> = plan.extra_d.iter().map(|x| pair(&plan.lpp, x).unwrap_or(0)).collect();
    out.push(
        "(v) L'' positive on an extra curve",
        degrees.iter().any(|&v| v > 0),
        format!("L''.D = {degrees:?}"),
    );
    tangency(&mut out, plan);
    out
}

/// Hypotheses (i)-(iv) of the variant with `s = 4`, `t = 5`, `k = 3`.
pub fn verify_metodo2(plan: &LimitPlan) -> Checklist {
    let mut out = Checklist::default();
    route_guard(&mut out, plan, Route::Metodo2);
    out.push(
        "shape s = 4, t = 5, k = 3",
        (plan.s, plan.t, plan.k) == (4, 5, 3),
        format!("s = {}, t = {}, k = {}", plan.s, plan.t, plan.k),
    );
    cartier(&mut out, "(i) L'.T = L''.T", plan);

    decomposition("(ii) L' = L'0 + sum C", &mut out, &plan.lp, &plan.lp0, &plan.c_list);
    count(&mut out, "(ii) three curves C", plan.c_list.len(), 3);
    let (ok, d) = disjoint_minus_ones(&plan.c_list);
    out.push("(ii) C disjoint (-1)-curves", ok, d);
    star_and_odd(&mut out, "(ii)", &plan.lp0);

    decomposition("(iii) L'' = L''0 + sum D", &mut out, &plan.lpp, &plan.lpp0, &plan.d_list);
    count(&mut out, "(iii) three curves D", plan.d_list.len(), 3);
    let (ok, d) = disjoint_minus_ones(&plan.d_list);
    out.push("(iii) D disjoint (-1)-curves", ok, d);
    big_and_nef(&mut out, "(iii)", &plan.lpp0);

    count(&mut out, "(iv) two extra curves", plan.extra_d.len(), 2);
    let (ok, d) = extra_disjoint(plan);
    out.push("(iv) extra curves disjoint", ok, d);
    let degrees: Vec<i64> = plan.extra_d.iter().map(|x| pair(&plan.lpp, x).unwrap_or(0)).collect();
    out.push(
        "(iv) distinct L'' degrees on extra curves",
        degrees.len() == 2 && degrees[0] != degrees[1],
        format!("L''.D4, L''.D5 = {degrees:?}"),
    );
    tangency(&mut out, plan);
    out
}

/// The special cases: the pictured curve has class `(L', L'')` and the
/// expected genus.
pub fn verify_explicit(plan: &LimitPlan) -> Checklist {
    let mut out = Checklist::default();
    route_guard(&mut out, plan, Route::Explicit);
    let Some(curve) = &plan.explicit else {
        out.push("explicit curve", false, "no curve recorded");
        return out;
    };
    decomposition("curve on R has class L'", &mut out, &plan.lp, &DivClass::zero(plan.lp.surface()), &curve.r_components);
    decomposition("curve on P has class L''", &mut out, &plan.lpp, &DivClass::zero(plan.lpp.surface()), &curve.p_components);
    cartier(&mut out, "L'.T = L''.T", plan);
    let genus = match XClass::new(plan.lp.clone(), plan.lpp.clone()) {
        Ok(x) => x.arithmetic_genus(),
        Err(_) => (plan.lp.square() + plan.lpp.square()) / 2 + 1,
    };
    out.push(
        "arithmetic genus of the curve",
        genus == curve.expected_genus,
        format!("p_a = {genus}, expected {}", curve.expected_genus),
    );
    out
}

/// Checks shared by every route: square conservation, genus and the node
/// ledger.
pub fn common_checks(plan: &LimitPlan) -> Checklist {
    let mut out = Checklist::default();
    let iso_sq = plan.l_iso.square();
    let split = plan.lp.square() + plan.lpp.square();
    out.push(
        "square conservation",
        iso_sq == split,
        format!("L^2 = {iso_sq}, L'^2 + L''^2 = {split}"),
    );
    let g = plan.source.genus();
    out.push(
        "genus of the limit",
        split % 2 == 0 && split / 2 + 1 == g,
        format!("(L'^2 + L''^2)/2 + 1 = {}, genus {g}", split / 2 + 1),
    );
    if plan.case_id == CaseId::S71 || plan.case_id == CaseId::S721 {
        return out;
    }
    match plan_ledger(plan) {
        Ok(l) => {
            out.push("ledger parity", true, format!("gamma0 = {}, delta0 = {}", l.gamma0, l.delta0));
            out.push(
                "ledger p_a(Y) = genus",
                l.pa_y == g,
                format!(
                    "gamma0 + gamma + delta0 + delta + m = {} + {} + {} + {} + {} = {}",
                    l.gamma0, l.gamma, l.delta0, l.delta, l.m, l.pa_y
                ),
            );
            out.push(
                "ledger dim |Y| = p_a(Y) - 1",
                l.dim_linear_system == l.pa_y - 1 && l.node_budget == l.pa_y - 1,
                format!("dim {}, nodes after smoothing {}", l.dim_linear_system, l.node_budget),
            );
        }
        Err(e) => out.push("ledger parity", false, e.to_string()),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::dispatch;
    use crate::moduli::FundamentalCoefficients;

    #[test]
    fn s722_names_the_three_exceptionals() {
        let plan = dispatch(&FundamentalCoefficients::with(&[(0, 3), (9, 3)])).unwrap();
        let v = plan.checklist.get("(v) L'' positive on an extra curve").unwrap();
        assert!(v.pass);
        assert_eq!(v.detail, "L''.D = [3, 3, 3]");
    }

    #[test]
    fn equal_extra_degrees_fail_the_variant() {
        let mut plan = dispatch(&FundamentalCoefficients::with(&[
            (0, 1),
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (6, 1),
            (7, 1),
            (9, 1),
            (10, 1),
        ]))
        .unwrap();
        plan.extra_d = vec![plan.extra_d[1].clone(), plan.extra_d[1].clone()];
        let list = verify_metodo2(&plan);
        assert!(!list.get("(iv) distinct L'' degrees on extra curves").unwrap().pass);
    }

    #[test]
    fn empty_extra_list_is_flagged() {
        let mut plan = dispatch(&FundamentalCoefficients::with(&[(0, 3), (9, 3)])).unwrap();
        plan.extra_d.clear();
        let list = verify_metodo1(&plan);
        assert!(!list.get("(v) L'' positive on an extra curve").unwrap().pass);
        assert!(!list.all_pass());
    }

    #[test]
    fn wrong_route_is_flagged() {
        let plan = dispatch(&FundamentalCoefficients::with(&[(0, 3), (9, 3)])).unwrap();
        assert!(!verify_metodo2(&plan).all_pass());
        assert!(verify_metodo1(&plan).all_pass());
    }
}
