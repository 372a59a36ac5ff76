//! Frozen reference tables shipped with the crate.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::lattice::{generator_pair, pair_x, restrict_generator, restrictable_generators, Generator, SurfaceModel};
use crate::positivity::minus_one_classes;

use super::parse::{parse_divisor, Parsed};

const GRAM_TABLE: &str = include_str!("../../tests/golden/iso_gram.tsv");
const MINUS_ONE_TABLE: &str = include_str!("../../tests/golden/minus_one_classes.tsv");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.pass)
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
}

fn parse_generator(text: &str) -> Option<Generator> {
    match parse_divisor(text, SurfaceModel::EnriquesIso).ok()? {
        Parsed::Iso(e) => {
            let terms = e.terms();
            (terms.len() == 1 && terms[0].0 == 1).then(|| terms[0].1)
        }
        Parsed::Div(_) => None,
    }
}

/// Every entry of the frozen Gram table against [`generator_pair`].
pub fn gram_suite() -> SuiteResult {
    let mut seen = 0;
    let mut mismatches = Vec::new();
    for line in data_lines(GRAM_TABLE) {
        let cols: Vec<&str> = line.split('\t').collect();
        let parsed = (cols.len() == 3)
            .then(|| Some((parse_generator(cols[0])?, parse_generator(cols[1])?, cols[2].parse::<i64>().ok()?)))
            .flatten();
        let Some((a, b, want)) = parsed else {
            mismatches.push(format!("malformed line '{line}'"));
            continue;
        };
        seen += 1;
        let got = generator_pair(a, b);
        if got != want {
            mismatches.push(format!("{a}.{b} = {got}, table says {want}"));
        }
    }
    let pass = mismatches.is_empty() && seen == 1540;
    SuiteResult {
        name: "isotropic Gram table".to_string(),
        pass,
        detail: if pass {
            format!("{seen} entries match")
        } else {
            format!("{seen} entries; {}", mismatches.join("; "))
        },
    }
}

/// Restriction to the limit surface preserves all products among the
/// twelve restrictable generators.
pub fn restriction_suite() -> SuiteResult {
    let gens = restrictable_generators();
    let mut mismatches = Vec::new();
    for &a in &gens {
        for &b in &gens {
            let x = pair_x(&restrict_generator(a).expect("restrictable"), &restrict_generator(b).expect("restrictable"))
                .expect("both on X(4,5)");
            let want = generator_pair(a, b);
            if x != want {
                mismatches.push(format!("{a}.{b}: {x} on X, {want} abstractly"));
            }
        }
    }
    SuiteResult {
        name: "restriction isometry".to_string(),
        pass: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            format!("{} products match", gens.len() * gens.len())
        } else {
            mismatches.join("; ")
        },
    }
}

/// The (-1)-class lists on `P(n)`, `n <= 8`, against the frozen table.
pub fn minus_one_suite() -> SuiteResult {
    let mut frozen: Vec<BTreeSet<String>> = vec![BTreeSet::new(); 9];
    let mut problems = Vec::new();
    for line in data_lines(MINUS_ONE_TABLE) {
        let Some((n, class)) = line.split_once('\t') else {
            problems.push(format!("malformed line '{line}'"));
            continue;
        };
        let Some(n) = n.parse::<usize>().ok().filter(|&n| n <= 8) else {
            problems.push(format!("bad point count in '{line}'"));
            continue;
        };
        match parse_divisor(class, SurfaceModel::P(n)) {
            Ok(p) => {
                frozen[n].insert(p.to_string());
            }
            Err(e) => problems.push(format!("'{class}': {e}")),
        }
    }
    let mut sizes = Vec::new();
    for (n, want) in frozen.iter().enumerate() {
        let got: BTreeSet<String> = minus_one_classes(n)
            .expect("n <= 8")
            .iter()
            .map(|c| c.to_string())
            .collect();
        if &got != want {
            problems.push(format!("P({n}): {} computed, {} frozen", got.len(), want.len()));
        }
        sizes.push(got.len());
    }
    SuiteResult {
        name: "(-1)-classes on P(n)".to_string(),
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("sizes {sizes:?} match")
        } else {
            problems.join("; ")
        },
    }
}

pub fn run_selftest() -> SelftestReport {
    SelftestReport {
        suites: vec![gram_suite(), restriction_suite(), minus_one_suite()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_suites_pass() {
        let report = run_selftest();
        assert!(report.passed(), "{report:#?}");
    }
}
