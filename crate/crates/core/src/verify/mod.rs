//! Runs every identity and bound check and gathers the results.
//!
//! Checks run in parallel and are sorted by id before they are returned, so
//! the report is byte-identical across runs. Known inconsistencies in the
//! source derivation appear as `erratum_documented` rows rather than
//! failures.

mod checks;
mod config;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use checks::registry;
pub use config::Tolerances;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    ErratumDocumented,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ErratumDocumented => "erratum_documented",
        }
    }
}

/// Either an exact comparison or a floating measurement.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Measure {
    Exact,
    Value(f64),
}

impl Serialize for Measure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Measure::Exact => serializer.serialize_str("exact"),
            Measure::Value(v) => serializer.serialize_f64(*v),
        }
    }
}

impl std::fmt::Display for Measure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Measure::Exact => f.write_str("exact"),
            Measure::Value(v) => write!(f, "{v:.3e}"),
        }
    }
}

/// What a check function produces; the runner adds id and timing.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub abs_err: Measure,
    pub tol: Measure,
}

impl Outcome {
    /// Exact equality check.
    pub fn exact(equal: bool, lhs: impl ToString, rhs: impl ToString) -> Self {
        Outcome {
            status: if equal { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            abs_err: Measure::Exact,
            tol: Measure::Exact,
        }
    }

    /// Passes when `abs_err ≤ tol` (NaN fails).
    pub fn within(lhs: impl ToString, rhs: impl ToString, abs_err: f64, tol: f64) -> Self {
        Outcome {
            status: if abs_err <= tol { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            abs_err: Measure::Value(abs_err),
            tol: Measure::Value(tol),
        }
    }

    /// A documented inconsistency; never a failure.
    pub fn erratum(lhs: impl ToString, rhs: impl ToString) -> Self {
        Outcome {
            status: Status::ErratumDocumented,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            abs_err: Measure::Exact,
            tol: Measure::Exact,
        }
    }

    /// Forces a failure regardless of the measured error.
    pub fn fail_if(mut self, failed: bool) -> Self {
        if failed {
            self.status = Status::Fail;
        }
        self
    }

    fn from_error(err: &Error) -> Self {
        Outcome {
            status: Status::Fail,
            lhs: format!("error: {err}"),
            rhs: String::new(),
            abs_err: Measure::Exact,
            tol: Measure::Exact,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub abs_err: Measure,
    pub tol: Measure,
    pub runtime_ms: u64,
}

pub type CheckFn = Box<dyn Fn(&Tolerances) -> Result<Outcome> + Send + Sync>;

/// A named check.
pub struct Check {
    pub id: String,
    pub run: CheckFn,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        run: impl Fn(&Tolerances) -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Check {
            id: id.into(),
            run: Box::new(run),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

/// Sorted ids of every registered check.
pub fn check_ids() -> Vec<String> {
    let mut ids: Vec<String> = registry().into_iter().map(|c| c.id).collect();
    ids.sort();
    ids
}

pub fn run_suite(selection: &Selection, tolerances: &Tolerances) -> Result<Vec<CheckResult>> {
    let mut checks = registry();
    if let Selection::Ids(ids) = selection {
        for id in ids {
            if !checks.iter().any(|c| &c.id == id) {
                let mut valid: Vec<String> = checks.iter().map(|c| c.id.clone()).collect();
                valid.sort();
                return Err(Error::UnknownCheck {
                    id: id.clone(),
                    valid,
                });
            }
        }
        checks.retain(|c| ids.contains(&c.id));
    }
    let mut results: Vec<CheckResult> = checks
        .into_par_iter()
        .map(|check| {
            let start = Instant::now();
            let outcome = (check.run)(tolerances).unwrap_or_else(|e| Outcome::from_error(&e));
            CheckResult {
                check_id: check.id,
                status: outcome.status,
                lhs: outcome.lhs,
                rhs: outcome.rhs,
                abs_err: outcome.abs_err,
                tol: outcome.tol,
                runtime_ms: start.elapsed().as_millis() as u64,
            }
        })
        .collect();
    results.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(results)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub erratum_documented: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Self {
        let mut s = Summary::default();
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::ErratumDocumented => s.erratum_documented += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.fail == 0
    }
}

/// One JSON object per line. Wall-clock timings are written as zero unless
/// requested, since they would make repeated reports differ.
pub fn to_jsonl(results: &[CheckResult], include_timings: bool) -> String {
    let mut out = String::new();
    for r in results {
        let line = if include_timings {
            serde_json::to_string(r)
        } else {
            serde_json::to_string(&CheckResult {
                runtime_ms: 0,
                ..r.clone()
            })
        };
        out.push_str(&line.expect("report rows always serialize"));
        out.push('\n');
    }
    out
}

/// Fixed-width table plus a count line.
pub fn summary_table(results: &[CheckResult], include_timings: bool) -> String {
    let width = results
        .iter()
        .map(|r| r.check_id.len())
        .max()
        .unwrap_or(8)
        .max(8);
    let mut out = String::new();
    let _ = write!(out, "{:<width$}  {:<18}  {:>10}  {:>10}", "check_id", "status", "abs_err", "tol");
    if include_timings {
        let _ = write!(out, "  {:>8}", "ms");
    }
    out.push('\n');
    for r in results {
        let _ = write!(
            out,
            "{:<width$}  {:<18}  {:>10}  {:>10}",
            r.check_id,
            r.status.as_str(),
            r.abs_err.to_string(),
            r.tol.to_string()
        );
        if include_timings {
            let _ = write!(out, "  {:>8}", r.runtime_ms);
        }
        out.push('\n');
    }
    let s = Summary::of(results);
    let _ = writeln!(
        out,
        "{} checks: {} pass, {} fail, {} erratum_documented",
        results.len(),
        s.pass,
        s.fail,
        s.erratum_documented
    );
    out
}
