//! Verification reports and their JSON-lines, CSV and text renderings.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::poly::{Discrepancy, Poly};

use super::{Expected, Outcome};

/// The result of running one verifier on one parameter tuple.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Vec<i64>,
    pub expected: Expected,
    pub discrepancy: Discrepancy,
    pub pass: bool,
    pub elapsed: Duration,
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn new(identity: &str, params: Vec<i64>, expected: Expected, outcome: Outcome, elapsed: Duration) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params,
            expected,
            pass: expected.accepts(&outcome.discrepancy),
            discrepancy: outcome.discrepancy,
            elapsed,
            note: outcome.note,
        }
    }

    pub fn elapsed_ms(&self) -> f64 {
        self.elapsed.as_secs_f64() * 1e3
    }

    pub fn record(&self) -> ReportRecord {
        let (constant, difference, witness) = match &self.discrepancy {
            Discrepancy::Zero => ((self.expected == Expected::ConstantOrZero).then(Rational::zero), None, None),
            Discrepancy::Constant(c) => (Some(c.clone()), None, None),
            Discrepancy::NonConstant { difference, witness } => (None, Some(difference.clone()), Some(*witness)),
        };
        ReportRecord {
            identity: self.identity.clone(),
            params: self.params.clone(),
            class: self.discrepancy.class_name().to_string(),
            constant,
            difference,
            witness,
            expected: self.expected.as_str().to_string(),
            pass: self.pass,
            note: self.note.clone(),
            elapsed_ms: (self.elapsed_ms() * 1e3).round() / 1e3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.record()).expect("report records always serialize")
    }

    pub fn to_csv_row(&self) -> String {
        let r = self.record();
        let fields = [
            csv_field(&r.identity),
            csv_field(&join_params(&r.params)),
            r.class.clone(),
            r.constant.map(|c| c.to_string()).unwrap_or_default(),
            // polynomial fields are always quoted
            quoted(&r.difference.map(|d| d.to_string()).unwrap_or_default()),
            r.witness.map(|w| w.to_string()).unwrap_or_default(),
            r.expected.clone(),
            r.pass.to_string(),
            csv_field(r.note.as_deref().unwrap_or("")),
            format!("{:.3}", r.elapsed_ms),
        ];
        fields.join(",")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} {}({}): {} [{:.3} ms]",
            if self.pass { "PASS" } else { "FAIL" },
            self.identity,
            self.params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "),
            self.discrepancy.class_name(),
            self.elapsed_ms()
        );
        match &self.discrepancy {
            Discrepancy::Zero if self.expected == Expected::ConstantOrZero => s.push_str("\n  constant: 0"),
            Discrepancy::Zero => {}
            Discrepancy::Constant(c) => {
                let _ = write!(s, "\n  constant: {c}");
            }
            Discrepancy::NonConstant { difference, witness } => {
                let _ = write!(s, "\n  difference: {difference}\n  witness: x^{witness}");
            }
        }
        if let Some(note) = &self.note {
            let _ = write!(s, "\n  note: {note}");
        }
        s
    }
}

pub const CSV_HEADER: &str = "identity,params,class,constant,difference,witness,expected,pass,note,elapsed_ms";

/// The serialized shape of a report. Rationals are `"p/q"` strings and a
/// difference polynomial is its coefficient list, constant term first.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: String,
    pub params: Vec<i64>,
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub difference: Option<Poly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
    pub expected: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elapsed_ms: f64,
}

impl ReportRecord {
    /// Rebuilds the discrepancy the record was written from.
    pub fn discrepancy(&self) -> Option<Discrepancy> {
        match self.class.as_str() {
            "zero" => Some(Discrepancy::Zero),
            "constant" => self.constant.clone().map(Discrepancy::Constant),
            "nonconstant" => self.difference.clone().map(Discrepancy::of_difference),
            _ => None,
        }
    }
}

fn join_params(params: &[i64]) -> String {
    params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        quoted(s)
    } else {
        s.to_string()
    }
}

/// Per-identity totals for the closing summary line of a sweep.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepSummary {
    pub rows: Vec<SummaryRow>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub identity: String,
    pub total: usize,
    pub passed: usize,
    pub max_ms: f64,
}

impl SweepSummary {
    pub fn from_reports(reports: &[VerificationReport]) -> Self {
        let mut rows: Vec<SummaryRow> = Vec::new();
        for r in reports {
            let row = match rows.iter_mut().find(|row| row.identity == r.identity) {
                Some(row) => row,
                None => {
                    rows.push(SummaryRow { identity: r.identity.clone(), total: 0, passed: 0, max_ms: 0.0 });
                    rows.last_mut().expect("just pushed")
                }
            };
            row.total += 1;
            row.passed += usize::from(r.pass);
            row.max_ms = row.max_ms.max(r.elapsed_ms());
        }
        SweepSummary { rows }
    }

    pub fn total(&self) -> usize {
        self.rows.iter().map(|r| r.total).sum()
    }

    pub fn failed(&self) -> usize {
        self.rows.iter().map(|r| r.total - r.passed).sum()
    }

    /// One line: overall counts, then `identity passed/total max=..ms` per identity.
    pub fn line(&self) -> String {
        let per: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("{} {}/{} max={:.3}ms", r.identity, r.passed, r.total, r.max_ms))
            .collect();
        format!(
            "summary: {} checked, {} passed, {} failed; {}",
            self.total(),
            self.total() - self.failed(),
            self.failed(),
            per.join("; ")
        )
    }
}
