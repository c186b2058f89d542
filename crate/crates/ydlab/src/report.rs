//! Verification reports shared by every verifier and the CLI.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::exactmat::LinMap;
use crate::par::{self, Execution};

/// Where an identity fails: a flat coordinate plus the two sides' values there.
///
/// For matrix identities the coordinate is `[row, col]`; for group identities
/// it lists the element indices that were substituted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub coordinate: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Check {
    pub fn pass(label: impl Into<String>) -> Self {
        Check { label: label.into(), passed: true, counterexample: None }
    }

    pub fn fail(label: impl Into<String>, cx: Counterexample) -> Self {
        Check { label: label.into(), passed: false, counterexample: Some(cx) }
    }

    /// Compares two sides of a matrix identity.
    pub fn maps(label: impl Into<String>, lhs: &LinMap, rhs: &LinMap) -> Self {
        let label = label.into();
        if lhs.shape() != rhs.shape() {
            return Check::fail(
                label,
                Counterexample {
                    coordinate: vec![],
                    lhs: format!("shape {}x{}", lhs.cod(), lhs.dom()),
                    rhs: format!("shape {}x{}", rhs.cod(), rhs.dom()),
                },
            );
        }
        match lhs.first_difference(rhs) {
            None => Check::pass(label),
            Some(d) => Check::fail(
                label,
                Counterexample {
                    coordinate: vec![d.row, d.col],
                    lhs: d.lhs.to_string(),
                    rhs: d.rhs.to_string(),
                },
            ),
        }
    }

    /// A check whose two sides could not even be formed.
    pub fn error(label: impl Into<String>, why: impl Into<String>) -> Self {
        Check::fail(label, Counterexample { coordinate: vec![], lhs: why.into(), rhs: String::new() })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
            seed: None,
            elapsed_ms: 0,
            notes: Vec::new(),
            data: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, label: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.label == label)
    }

    pub fn failed_labels(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.label.as_str()).collect()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.label)?;
            if let Some(cx) = &c.counterexample {
                write!(f, " at {:?}: lhs = {}, rhs = {}", cx.coordinate, cx.lhs, cx.rhs)?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        if let Some(s) = self.seed {
            writeln!(f, "  seed: {s}")?;
        }
        write!(f, "  elapsed: {} ms", self.elapsed_ms)
    }
}

pub(crate) type CheckFn<'a> = Box<dyn Fn() -> Check + Send + Sync + 'a>;

/// Evaluates independent checks, possibly concurrently, keeping declaration order.
pub(crate) fn run_checks(subject: impl Into<String>, checks: Vec<CheckFn<'_>>) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(subject);
    report.checks = par::map_indices(Execution::default(), checks.len(), |i| checks[i]());
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Builds a matrix check from a closure producing both sides.
pub(crate) fn map_check<'a, F>(label: &'a str, f: F) -> CheckFn<'a>
where
    F: Fn() -> crate::Result<(LinMap, LinMap)> + Send + Sync + 'a,
{
    Box::new(move || match f() {
        Ok((l, r)) => Check::maps(label, &l, &r),
        Err(e) => Check::error(label, e.to_string()),
    })
}
