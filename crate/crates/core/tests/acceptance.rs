//! Acceptance gate. Prints one `PASS`/`FAIL` line per criterion, then fails
//! if any criterion failed. Run with `--nocapture` to see the lines.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use enriques_severi::cli::{parse_divisor, Parsed};
use enriques_severi::degeneration::sweep;
use enriques_severi::lattice::{
    generator_pair, iso_pair, pair_x, restrict_generator, restrictable_generators, DivClass, Generator, IsoExpr,
};
use enriques_severi::moduli::{enumerate_components, Filter, FundamentalCoefficients};
use enriques_severi::positivity::{condition_star, minus_one_classes};
use enriques_severi::{dispatch, SurfaceModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
    elapsed: Duration,
}

type Criterion = (&'static str, fn() -> Outcome);

fn timed(budget: Option<Duration>, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (ok, mut detail) = f();
    let elapsed = start.elapsed();
    let in_budget = budget.is_none_or(|b| elapsed <= b);
    if !in_budget {
        detail.push_str(&format!("; over budget {:?}", budget.unwrap()));
    }
    Outcome {
        pass: ok && in_budget,
        detail,
        elapsed,
    }
}

/// Gram rule from the relation list, on index sets.
fn gram_oracle(a: Generator, b: Generator) -> i64 {
    let set = |g: Generator| -> Vec<u8> {
        match g {
            Generator::E(i) => vec![i],
            Generator::Eij(i, j) => vec![i, j],
        }
    };
    let (a, b) = (set(a), set(b));
    let shared = a.iter().filter(|x| b.contains(x)).count();
    match (a.len(), b.len(), shared) {
        (1, 1, 1) => 0,
        (1, 1, _) => 1,
        (1, 2, 1) | (2, 1, 1) => 2,
        (1, 2, _) | (2, 1, _) => 1,
        (2, 2, 2) => 0,
        (2, 2, 1) => 1,
        _ => 2,
    }
}

fn criterion_gram() -> Outcome {
    timed(Some(Duration::from_secs(1)), || {
        let gens = Generator::all();
        let mut pairs = 0;
        let mut bad = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i..] {
                pairs += 1;
                let got = iso_pair(&IsoExpr::generator(a), &IsoExpr::generator(b));
                if got != gram_oracle(a, b) {
                    bad.push(format!("{a}.{b}"));
                }
            }
        }
        (
            gens.len() == 55 && pairs == 1540 && bad.is_empty(),
            format!("{} generators, {pairs} pairs, {} mismatches", gens.len(), bad.len()),
        )
    })
}

fn criterion_restriction() -> Outcome {
    timed(Some(Duration::from_secs(1)), || {
        let gens = restrictable_generators();
        let mut bad = 0;
        for &a in &gens {
            for &b in &gens {
                let ra = restrict_generator(a).expect("restrictable");
                let rb = restrict_generator(b).expect("restrictable");
                if ra.model() != (SurfaceModel::X { n_r: 4, n_p: 5 }) || pair_x(&ra, &rb).ok() != Some(gram_oracle(a, b)) {
                    bad += 1;
                }
            }
        }
        (
            gens.len() == 12 && bad == 0,
            format!("{} generators, {} products, {bad} mismatches", gens.len(), gens.len() * gens.len()),
        )
    })
}

fn criterion_special_genera() -> Outcome {
    timed(None, || {
        let genus_of = |fc: FundamentalCoefficients| {
            dispatch(&fc)
                .ok()
                .map(|p| (p.explicit.as_ref().map(|c| c.expected_genus), p.source.genus(), p.verified()))
        };
        let two = genus_of(FundamentalCoefficients::with(&[(1, 1), (2, 1)]));
        let three = genus_of(FundamentalCoefficients::with(&[(0, 1), (9, 1)]));
        let ok = two == Some((Some(2), 2, true)) && three == Some((Some(3), 3, true));
        (ok, format!("a1=a2=1 -> {two:?}; a0=a9=1 -> {three:?}"))
    })
}

fn criterion_sweep() -> Outcome {
    timed(Some(Duration::from_secs(60)), || {
        let report = sweep(2, 50);
        let mut by_case: std::collections::BTreeMap<&str, usize> = Default::default();
        for f in &report.failures {
            *by_case.entry(f.case_id.as_deref().unwrap_or("-")).or_default() += 1;
        }
        (
            report.passed(),
            format!(
                "{} components, {} verified, {} failures {by_case:?}",
                report.components,
                report.verified,
                report.failures.len()
            ),
        )
    })
}

fn criterion_cond_iv() -> Outcome {
    timed(Some(Duration::from_secs(1)), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut disagreements = 0;
        let trials = 10_000;
        for _ in 0..trials {
            let n = rng.gen_range(0..=6);
            let a = rng.gen_range(-9..=9i64);
            let b = rng.gen_range(-9..=9i64);
            let gammas: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
            // K = -2s + f + sum e_i with s^2 = 1, s.f = 1, f^2 = 0, e_i^2 = -1.
            let l_dot_k = a * (-2 + 1) + b * (-2) + gammas.iter().map(|g| -g * -1).sum::<i64>();
            let report = condition_star(&DivClass::on_r(a, b, &gammas)).expect("class on R");
            if report.cond_iv != (-l_dot_k >= 4) {
                disagreements += 1;
            }
        }
        (disagreements == 0, format!("{trials} random classes, {disagreements} disagreements"))
    })
}

fn criterion_census() -> Outcome {
    timed(None, || {
        let frozen = include_str!("golden/minus_one_classes.tsv");
        let mut sizes = Vec::new();
        let mut ok = true;
        for n in 1..=5usize {
            let want: BTreeSet<String> = frozen
                .lines()
                .filter(|l| !l.starts_with('#'))
                .filter_map(|l| l.split_once('\t'))
                .filter(|(k, _)| k.parse::<usize>().ok() == Some(n))
                .map(|(_, c)| match parse_divisor(c, SurfaceModel::P(n)) {
                    Ok(Parsed::Div(d)) => d.to_string(),
                    _ => format!("unparseable {c}"),
                })
                .collect();
            let got: BTreeSet<String> = minus_one_classes(n).expect("n <= 8").iter().map(|c| c.to_string()).collect();
            ok &= got == want;
            sizes.push(got.len());
        }
        ok &= sizes == [1, 3, 6, 10, 16];
        (ok, format!("sizes {sizes:?} for n = 1..5 against the frozen search"))
    })
}

fn criterion_parity() -> Outcome {
    timed(None, || {
        let mut tuples = 0;
        let mut bad = Vec::new();
        for g in 2..=50 {
            for fc in enumerate_components(g, Filter::All) {
                tuples += 1;
                let all_even = fc.to_vec()[..10].iter().all(|c| c % 2 == 0);
                let expr = fc.to_iso_expr();
                let even_on_e = (1..=10u8).all(|i| {
                    iso_pair(&expr, &IsoExpr::generator(Generator::e(i).expect("index in range"))) % 2 == 0
                });
                if fc.is_two_divisible() != all_even || all_even != even_on_e {
                    bad.push(fc.to_string());
                }
            }
        }
        (bad.is_empty(), format!("{tuples} tuples, {} discrepancies {:?}", bad.len(), &bad[..bad.len().min(5)]))
    })
}

fn criterion_determinism() -> Outcome {
    timed(None, || {
        let run = |jobs: &str| {
            Command::new(env!("CARGO_BIN_EXE_enriques-severi"))
                .args(["verify", "--genus-range", "2..50", "--jobs", jobs])
                .output()
                .expect("binary runs")
        };
        let (one, eight) = (run("1"), run("8"));
        let same = one.stdout == eight.stdout && one.status.code() == eight.status.code();
        (
            same && !one.stdout.is_empty(),
            format!(
                "{} bytes with --jobs 1, {} bytes with --jobs 8, exit {:?}/{:?}",
                one.stdout.len(),
                eight.stdout.len(),
                one.status.code(),
                eight.status.code()
            ),
        )
    })
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("gram reproduction", criterion_gram),
        ("restriction isometry", criterion_restriction),
        ("special-case genus values", criterion_special_genera),
        ("coverage sweep 2..50", criterion_sweep),
        ("condition (*)(iv) equivalence", criterion_cond_iv),
        ("(-1)-class census", criterion_census),
        ("parity criterion", criterion_parity),
        ("verify determinism", criterion_determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        println!(
            "{} {}. {name}: {} ({:.3}s)",
            if out.pass { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            out.elapsed.as_secs_f64()
        );
        if !out.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}

#[test]
fn generator_pair_agrees_with_oracle() {
    for a in Generator::all() {
        for b in Generator::all() {
            assert_eq!(generator_pair(a, b), gram_oracle(a, b), "{a}.{b}");
        }
    }
}
