//! Command surface behind the `enriques-severi` binary.
//!
//! Every command returns an [`Output`] holding the text for stdout and the
//! process exit status: 0 when everything checked out, 1 when a check
//! failed, 2 for malformed input.

mod parse;
mod record;
mod selftest;

use std::fmt;

pub use parse::{parse_divisor, parse_model, Parsed};
pub use record::{render_records, ComponentRecord, Format, LimitBundle, VerifySummary, TSV_HEADER};
pub use selftest::{gram_suite, minus_one_suite, restriction_suite, run_selftest, SelftestReport, SuiteResult};

use crate::degeneration::sweep;
use crate::error::CliError;
use crate::lattice::{iso_pair, pair};
use crate::moduli::{enumerate_range, Filter, FundamentalCoefficients};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn new(text: String, ok: bool) -> Self {
        Output {
            text,
            code: if ok { EXIT_OK } else { EXIT_FALSIFIED },
        }
    }
}

/// An inclusive genus range.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GenusRange {
    pub lo: i64,
    pub hi: i64,
}

impl GenusRange {
    pub fn single(g: i64) -> Self {
        GenusRange { lo: g, hi: g }
    }
}

impl fmt::Display for GenusRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl std::str::FromStr for GenusRange {
    type Err = CliError;

    /// `A..B`, both ends included, `2 <= A <= B`.
    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("genus range '{s}' is not of the form A..B with 2 <= A <= B"));
        let (a, b) = s.split_once("..").ok_or_else(bad)?;
        let lo: i64 = a.trim().parse().map_err(|_| bad())?;
        let hi: i64 = b.trim().parse().map_err(|_| bad())?;
        if lo < 2 || hi < lo {
            return Err(bad());
        }
        Ok(GenusRange { lo, hi })
    }
}

/// Eleven comma-separated integers `a0,a1..a7,a9,a10,eps`.
pub fn parse_coefficients(text: &str) -> Result<FundamentalCoefficients, CliError> {
    let values: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let values = values.map_err(|_| CliError::Usage(format!("'{text}' is not a list of integers")))?;
    FundamentalCoefficients::from_slice(&values).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn cmd_enumerate(range: GenusRange, filter: Filter, format: Format) -> Output {
    let records: Vec<ComponentRecord> = enumerate_range(range.lo, range.hi, filter)
        .iter()
        .map(ComponentRecord::classify)
        .collect();
    Output::new(render_records(&records, format), true)
}

pub fn cmd_classify(coeffs: &str) -> Result<Output, CliError> {
    let fc = parse_coefficients(coeffs)?;
    let rec = ComponentRecord::classify(&fc);
    let ok = rec.verified && rec.error.is_none();
    Ok(Output::new(json_pretty(&rec), ok))
}

pub fn cmd_plan(coeffs: &str, format: Format) -> Result<Output, CliError> {
    let fc = parse_coefficients(coeffs)?;
    let rec = ComponentRecord::plan(&fc);
    let ok = rec.verified;
    let text = match format {
        Format::Json => json_pretty(&rec),
        Format::Tsv => render_records(&[rec], Format::Tsv),
    };
    Ok(Output::new(text, ok))
}

/// The coverage sweep; `jobs = None` uses rayon's default pool.
pub fn cmd_verify(range: GenusRange, jobs: Option<usize>) -> Result<Output, CliError> {
    let run = || sweep(range.lo, range.hi);
    let report = match jobs {
        None => run(),
        Some(0) => return Err(CliError::Usage("--jobs must be at least 1".to_string())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(run),
    };
    let ok = report.passed();
    let summary = VerifySummary {
        genus_range: range.to_string(),
        report,
    };
    Ok(Output::new(json_pretty(&summary), ok))
}

pub fn cmd_pair(model: &str, lhs: &str, rhs: &str) -> Result<Output, CliError> {
    let model = parse_model(model)?;
    let a = parse_divisor(lhs, model)?;
    let b = parse_divisor(rhs, model)?;
    let value = match (&a, &b) {
        (Parsed::Div(x), Parsed::Div(y)) => pair(x, y)?,
        (Parsed::Iso(x), Parsed::Iso(y)) => iso_pair(x, y),
        _ => unreachable!("both parsed on the same model"),
    };
    Ok(Output::new(format!("{value}\n"), true))
}

pub fn cmd_selftest() -> Output {
    let report = run_selftest();
    let mut text = String::new();
    for s in &report.suites {
        text.push_str(&format!("{} {}: {}\n", if s.pass { "PASS" } else { "FAIL" }, s.name, s.detail));
    }
    Output::new(text, report.passed())
}

fn json_pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let out = cmd_classify("1,1,1,1,1,1,1,1,1,1,0").unwrap();
        assert_eq!(out.code, EXIT_OK);
        let rec: ComponentRecord = serde_json::from_str(&out.text).unwrap();
        assert_eq!(rec.trichotomy.as_deref(), Some("CASE_III"));

        let out = cmd_classify("1,1,1,0,0,0,0,0,1,1,0").unwrap();
        let rec: ComponentRecord = serde_json::from_str(&out.text).unwrap();
        assert_eq!(rec.trichotomy.as_deref(), Some("CASE_I"));

        assert!(matches!(cmd_classify("1,2,3"), Err(CliError::Usage(_))));
        assert_eq!(cmd_classify("2,0,0,0,0,0,0,0,0,0,0").unwrap().code, EXIT_FALSIFIED);
    }

    #[test]
    fn pair_examples() {
        assert_eq!(cmd_pair("E", "E1", "E9.10").unwrap().text, "1\n");
        assert_eq!(cmd_pair("R(4)", "2s-f-e1-e2-e3-e4", "2s-f-e1-e2-e3-e4").unwrap().text, "-4\n");
        assert!(matches!(cmd_pair("P(1)", "e2", "l"), Err(CliError::Parse(_))));
        assert!(matches!(cmd_pair("X(4,5)", "s", "l"), Err(CliError::Parse(_))));
    }

    #[test]
    fn ranges() {
        assert_eq!("2..50".parse::<GenusRange>().unwrap(), GenusRange { lo: 2, hi: 50 });
        assert!("1..5".parse::<GenusRange>().is_err());
        assert!("5..3".parse::<GenusRange>().is_err());
        assert!("7".parse::<GenusRange>().is_err());
    }

    #[test]
    fn verify_small_range_is_job_independent() {
        let one = cmd_verify(GenusRange { lo: 2, hi: 12 }, Some(1)).unwrap();
        let four = cmd_verify(GenusRange { lo: 2, hi: 12 }, Some(4)).unwrap();
        assert_eq!(one, four);
        assert!(cmd_verify(GenusRange::single(3), Some(0)).is_err());
    }

    #[test]
    fn enumerate_tsv_has_header() {
        let out = cmd_enumerate(GenusRange::single(2), Filter::All, Format::Tsv);
        assert!(out.text.starts_with(TSV_HEADER));
    }
}
