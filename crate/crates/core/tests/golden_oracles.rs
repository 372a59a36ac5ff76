//! Independent oracles behind the frozen tables in `tests/golden/`.
//!
//! Regenerate with `cargo test --test golden_oracles -- --ignored`.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Generators as index sets: `{i}` for `E_i`, `{i, j}` for `E_{i,j}`.
fn generators() -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = (1..=10).map(|i| vec![i]).collect();
    for i in 1..=10u8 {
        for j in i + 1..=10 {
            out.push(vec![i, j]);
        }
    }
    out
}

fn name(g: &[u8]) -> String {
    match g {
        [i] => format!("E{i}"),
        [i, j] => format!("E{i}.{j}"),
        _ => unreachable!(),
    }
}

/// The relation list, case by case.
fn gram_rule(a: &[u8], b: &[u8]) -> i64 {
    let shared = a.iter().filter(|x| b.contains(x)).count();
    match (a.len(), b.len()) {
        (1, 1) => i64::from(a != b),
        (1, 2) | (2, 1) => {
            if shared == 1 {
                2
            } else {
                1
            }
        }
        (2, 2) => match shared {
            2 => 0,
            1 => 1,
            _ => 2,
        },
        _ => unreachable!(),
    }
}

fn gram_table() -> String {
    let gens = generators();
    let mut out = String::from("# isotropic Gram table: a\tb\ta.b, unordered pairs with a <= b\n");
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            out.push_str(&format!("{}\t{}\t{}\n", name(a), name(b), gram_rule(a, b)));
        }
    }
    out
}

/// Exhaustive search over `0 <= d <= 10`, `|m_i| <= 10` for
/// `d^2 - sum m_i^2 = -1` and `3d - sum m_i = 1`. The running sum of squares
/// can never exceed `d^2 + 1`, which is the only pruning used.
fn minus_one_oracle(n: usize) -> BTreeSet<(i64, Vec<i64>)> {
    fn rec(n: usize, d: i64, ms: &mut Vec<i64>, out: &mut BTreeSet<(i64, Vec<i64>)>) {
        let sq: i64 = ms.iter().map(|m| m * m).sum();
        if sq > d * d + 1 {
            return;
        }
        if ms.len() == n {
            let sum: i64 = ms.iter().sum();
            if sq == d * d + 1 && 3 * d - sum == 1 {
                out.insert((d, ms.clone()));
            }
            return;
        }
        for m in -10..=10 {
            ms.push(m);
            rec(n, d, ms, out);
            ms.pop();
        }
    }
    let mut out = BTreeSet::new();
    for d in 0..=10 {
        rec(n, d, &mut Vec::new(), &mut out);
    }
    out
}

fn format_p(d: i64, ms: &[i64]) -> String {
    let mut s = if d == 0 { String::new() } else { format!("{d}l") };
    for (i, &m) in ms.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let c = -m;
        let sign = if c < 0 { "-" } else if s.is_empty() { "" } else { "+" };
        let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
        s.push_str(&format!("{sign}{mag}e{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn minus_one_table() -> String {
    let mut out = String::from("# (-1)-classes on P(n): n\tclass, exhaustive search d <= 10, |m_i| <= 10\n");
    for n in 0..=8 {
        for (d, ms) in minus_one_oracle(n) {
            out.push_str(&format!("{n}\t{}\n", format_p(d, &ms)));
        }
    }
    out
}

#[test]
#[ignore = "rewrites the frozen tables"]
fn regenerate_golden_files() {
    fs::write(golden("iso_gram.tsv"), gram_table()).unwrap();
    fs::write(golden("minus_one_classes.tsv"), minus_one_table()).unwrap();
}

#[test]
fn frozen_gram_table_matches_oracle() {
    assert_eq!(fs::read_to_string(golden("iso_gram.tsv")).unwrap(), gram_table());
}

#[test]
fn oracle_census_small_n() {
    let sizes: Vec<usize> = (1..=5).map(|n| minus_one_oracle(n).len()).collect();
    assert_eq!(sizes, vec![1, 3, 6, 10, 16]);
}

#[test]
fn frozen_minus_one_table_covers_small_n() {
    let text = fs::read_to_string(golden("minus_one_classes.tsv")).unwrap();
    for n in 0..=5usize {
        let frozen: BTreeSet<String> = text
            .lines()
            .filter_map(|l| l.split_once('\t'))
            .filter(|(k, _)| k.parse::<usize>().ok() == Some(n))
            .map(|(_, c)| c.to_string())
            .collect();
        let fresh: BTreeSet<String> = minus_one_oracle(n).iter().map(|(d, m)| format_p(*d, m)).collect();
        assert_eq!(frozen, fresh, "n = {n}");
    }
}
