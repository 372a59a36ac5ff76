use serde::{Deserialize, Serialize};

use crate::degeneration::{dispatch, Check, LimitPlan, SweepReport};
use crate::moduli::{FundamentalCoefficients, Witness};

/// Version line opening every TSV stream.
pub const TSV_HEADER: &str = "# enriques-severi v1";

const TSV_COLUMNS: &str = "genus\tcoefficients\ttwo_divisible\ttrichotomy\tcase_id\tverified";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitBundle {
    pub r_class: String,
    pub p_class: String,
    pub iso_expr: String,
}

/// One moduli component with whatever is known about it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub genus: i64,
    /// `a0, a1..a7, a9, a10, eps`.
    pub coefficients: Vec<i64>,
    pub two_divisible: bool,
    pub trichotomy: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub case_id: Option<String>,
    pub checklist: Vec<Check>,
    pub limit_bundle: Option<LimitBundle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    pub m: Option<i64>,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub k: Option<usize>,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ComponentRecord {
    /// Validation, parity and the trichotomy; no limit construction.
    pub fn classify(fc: &FundamentalCoefficients) -> Self {
        let violations = fc.violations();
        let valid = violations.is_empty();
        let detail = if valid {
            "all constraints hold".to_string()
        } else {
            violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
        };
        let (trichotomy, witness, error) = if !valid {
            (None, None, None)
        } else {
            match fc.trichotomy() {
                Ok(case) => {
                    let w = match case {
                        crate::moduli::TrichotomyCase::CaseI(w) => Some(w),
                        _ => None,
                    };
                    (Some(case.label().to_string()), w, None)
                }
                Err(e) => (None, None, Some(e.to_string())),
            }
        };
        let checklist = vec![Check {
            name: "valid fundamental coefficients".to_string(),
            pass: valid,
            detail,
        }];
        ComponentRecord {
            genus: fc.genus(),
            coefficients: fc.to_vec(),
            two_divisible: fc.is_two_divisible(),
            trichotomy,
            witness,
            case_id: None,
            verified: valid,
            checklist,
            limit_bundle: None,
            provenance: None,
            m: None,
            s: None,
            t: None,
            k: None,
            error,
        }
    }

    /// Classification plus the full limit plan and its checklist.
    pub fn plan(fc: &FundamentalCoefficients) -> Self {
        let mut rec = Self::classify(fc);
        match dispatch(fc) {
            Ok(plan) => rec.attach(&plan),
            Err(e) => {
                rec.checklist.push(Check {
                    name: "limit plan".to_string(),
                    pass: false,
                    detail: e.to_string(),
                });
                rec.verified = false;
                rec.error = Some(e.to_string());
            }
        }
        rec
    }

    fn attach(&mut self, plan: &LimitPlan) {
        self.case_id = Some(plan.case_id.to_string());
        self.checklist = plan.checklist.iter().cloned().collect();
        self.limit_bundle = Some(LimitBundle {
            r_class: plan.lp.to_string(),
            p_class: plan.lpp.to_string(),
            iso_expr: plan.l_iso.to_string(),
        });
        self.provenance = Some(plan.provenance());
        self.m = plan.m;
        self.s = Some(plan.s);
        self.t = Some(plan.t);
        self.k = Some(plan.k);
        self.verified = plan.verified();
    }

    pub fn tsv_row(&self) -> String {
        let join = self.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.genus,
            join,
            self.two_divisible,
            self.trichotomy.as_deref().unwrap_or("-"),
            self.case_id.as_deref().unwrap_or("-"),
            self.verified
        )
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

/// Records as JSON lines or as a versioned TSV table.
pub fn render_records(records: &[ComponentRecord], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            for r in records {
                out.push_str(&serde_json::to_string(r).expect("records serialize"));
                out.push('\n');
            }
        }
        Format::Tsv => {
            out.push_str(TSV_HEADER);
            out.push('\n');
            out.push_str(TSV_COLUMNS);
            out.push('\n');
            for r in records {
                out.push_str(&r.tsv_row());
                out.push('\n');
            }
        }
    }
    out
}

/// Summary of a verification sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub genus_range: String,
    #[serde(flatten)]
    pub report: SweepReport,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        for fc in [
            FundamentalCoefficients::with(&[(0, 3), (9, 3)]),
            FundamentalCoefficients::with(&[(1, 1), (2, 1)]),
            FundamentalCoefficients::with(&[(1, 2), (2, 2)]),
            FundamentalCoefficients::with(&[(0, 2)]),
        ] {
            let rec = ComponentRecord::plan(&fc);
            let text = serde_json::to_string(&rec).unwrap();
            let back: ComponentRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(back, rec);
            assert_eq!(rec.verified, !rec.checklist.is_empty() && rec.checklist.iter().all(|c| c.pass));
        }
    }

    #[test]
    fn tsv_layout() {
        let rec = ComponentRecord::classify(&FundamentalCoefficients::with(&[(0, 1), (9, 1)]));
        let text = render_records(&[rec], Format::Tsv);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], TSV_HEADER);
        assert_eq!(lines[2], "3\t1,0,0,0,0,0,0,0,1,0,0\tfalse\tCASE_I\t-\ttrue");
    }
}
