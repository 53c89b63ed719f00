//! Check results and the run report.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An open item: recorded and shown, never counted as a failure.
    Flagged,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::Flagged => "FLAG",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub detail: String,
    pub data: Value,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

impl Summary {
    pub fn tally(checks: &[CheckResult]) -> Self {
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        Self {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            flagged: count(Status::Flagged),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(mut checks: Vec<CheckResult>, elapsed_ms: u64) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            summary: Summary::tally(&checks),
            checks,
            elapsed_ms,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_failures())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        writeln!(out, "kummerlab {}", self.version).unwrap();
        for c in &self.checks {
            writeln!(out, "{}  {:width$}  {}", c.status.tag(), c.id, c.detail).unwrap();
        }
        let flagged: Vec<&CheckResult> = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Flagged)
            .collect();
        if !flagged.is_empty() {
            writeln!(out, "\nopen items ({}):", flagged.len()).unwrap();
            for c in flagged {
                writeln!(out, "  * {}: {}", c.id, c.detail).unwrap();
            }
        }
        writeln!(
            out,
            "\n{} passed, {} failed, {} flagged in {} ms",
            self.summary.pass, self.summary.fail, self.summary.flagged, self.elapsed_ms
        )
        .unwrap();
        out
    }
}
