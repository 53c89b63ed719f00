//! Verification runner for `kummerlab-core` with text and JSON reports.

pub mod checks;
pub mod error;
pub mod interchange;
pub mod report;

use std::time::Instant;

pub use checks::{list_checks, registry, select, CheckInfo, Context};
pub use error::{Error, Result};
pub use report::{CheckResult, Report, Status, Summary};

/// Runs every check matching one of `patterns` (all checks when empty).
pub fn run(patterns: &[String]) -> Result<Report> {
    let start = Instant::now();
    let selected = select(registry(), patterns)?;
    let ctx = Context::new();
    let results = checks::run_checks(&selected, &ctx);
    let elapsed_ms = u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX);
    Ok(Report::new(results, elapsed_ms))
}
