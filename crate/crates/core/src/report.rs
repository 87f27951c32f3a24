//! Verification reports shared by every suite.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// One comparison. `status` is `Pass` exactly when `expected == got`,
/// unless the check was skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub degree: i64,
    pub basis: String,
    pub expected: String,
    pub got: String,
    pub status: Status,
}

impl Check {
    pub fn compare(degree: i64, basis: impl Into<String>, expected: impl fmt::Display, got: impl fmt::Display) -> Self {
        let expected = expected.to_string();
        let got = got.to_string();
        let status = if expected == got { Status::Pass } else { Status::Fail };
        Self {
            degree,
            basis: basis.into(),
            expected,
            got,
            status,
        }
    }

    pub fn skipped(degree: i64, basis: impl Into<String>, expected: impl fmt::Display, reason: &str) -> Self {
        Self {
            degree,
            basis: basis.into(),
            expected: expected.to_string(),
            got: format!("skipped: {reason}"),
            status: Status::Skipped,
        }
    }

    /// A check whose computation itself failed (e.g. a non-invertible scalar).
    pub fn failed(degree: i64, basis: impl Into<String>, expected: impl fmt::Display, error: impl fmt::Display) -> Self {
        Self {
            degree,
            basis: basis.into(),
            expected: expected.to_string(),
            got: format!("error: {error}"),
            status: Status::Fail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperationReport {
    pub suite: String,
    pub window: [i64; 2],
    pub checks: Vec<Check>,
}

impl OperationReport {
    pub fn new(suite: impl Into<String>, window: (i64, i64)) -> Self {
        Self {
            suite: suite.into(),
            window: [window.0, window.1],
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// No check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Stable ordering by degree, keeping insertion order within a degree.
    pub fn sort(&mut self) {
        self.checks.sort_by_key(|c| c.degree);
    }

    pub fn merge(&mut self, other: OperationReport) {
        self.checks.extend(other.checks);
        self.sort();
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} [{}..{}] pass={} fail={} skipped={}",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.window[0],
            self.window[1],
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        )
    }
}
