//! The registry of verification checks.
//!
//! Every check has a stable dotted id. Its description and anchor name the
//! statement it verifies. Checks read shared, lazily computed data
//! from a [`Context`] and never mutate it.

use std::sync::OnceLock;

use glob::Pattern;
use kummerlab_core::code::NodeSet;
use kummerlab_core::NarukiModel;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::report::{CheckResult, Status};

mod cover;
mod fibration;
mod lattice;
mod nikulin;

#[derive(Default)]
pub struct Context {
    model: OnceLock<NarukiModel>,
    even_sets: OnceLock<Vec<NodeSet>>,
}

impl Context {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn model(&self) -> &NarukiModel {
        self.model.get_or_init(NarukiModel::new)
    }

    /// All even node sets, from the exhaustive scan.
    pub fn even_sets(&self) -> &[NodeSet] {
        self.even_sets.get_or_init(|| self.model().scan_even_sets())
    }

    pub fn even_eights(&self) -> Vec<NodeSet> {
        self.even_sets()
            .iter()
            .copied()
            .filter(|s| s.weight() == 8)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub detail: String,
    pub data: Value,
}

impl Outcome {
    pub fn verdict(ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Self {
            status,
            detail: detail.into(),
            data: Value::Null,
        }
    }

    pub fn flagged(detail: impl Into<String>) -> Self {
        Self {
            status: Status::Flagged,
            detail: detail.into(),
            data: Value::Null,
        }
    }

    pub fn with_data(mut self, data: impl Serialize) -> Self {
        self.data = serde_json::to_value(data).expect("check data is plain JSON");
        self
    }
}

type Body = Box<dyn Fn(&Context) -> Result<Outcome> + Send + Sync>;

pub struct Check {
    pub id: String,
    pub description: String,
    pub anchor: String,
    body: Body,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        anchor: impl Into<String>,
        body: impl Fn(&Context) -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            anchor: anchor.into(),
            body: Box::new(body),
        }
    }

    /// Runs the check; an error inside the body is reported as a failure.
    pub fn run(&self, ctx: &Context) -> CheckResult {
        let outcome =
            (self.body)(ctx).unwrap_or_else(|e| Outcome::verdict(false, format!("error: {e}")));
        CheckResult {
            id: self.id.clone(),
            status: outcome.status,
            detail: outcome.detail,
            data: outcome.data,
        }
    }
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckInfo {
    pub id: String,
    pub description: String,
    pub anchor: String,
}

/// All checks, sorted by id.
pub fn registry() -> Vec<Check> {
    let mut all = Vec::new();
    all.extend(lattice::checks());
    all.extend(nikulin::checks());
    all.extend(fibration::checks());
    all.extend(cover::checks());
    all.sort_by(|a, b| a.id.cmp(&b.id));
    all
}

pub fn list_checks() -> Vec<CheckInfo> {
    registry()
        .into_iter()
        .map(|c| CheckInfo {
            id: c.id,
            description: c.description,
            anchor: c.anchor,
        })
        .collect()
}

/// Checks whose id matches at least one pattern; every pattern must match
/// something. An empty pattern list selects everything.
pub fn select(checks: Vec<Check>, patterns: &[String]) -> Result<Vec<Check>> {
    if patterns.is_empty() {
        return Ok(checks);
    }
    let compiled = patterns
        .iter()
        .map(|p| {
            Pattern::new(p).map_err(|e| Error::BadPattern {
                pattern: p.clone(),
                message: e.msg.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    for (raw, pattern) in patterns.iter().zip(&compiled) {
        if !checks.iter().any(|c| pattern.matches(&c.id)) {
            return Err(Error::UnknownCheck(raw.clone()));
        }
    }
    Ok(checks
        .into_iter()
        .filter(|c| compiled.iter().any(|p| p.matches(&c.id)))
        .collect())
}

pub fn run_checks(checks: &[Check], ctx: &Context) -> Vec<CheckResult> {
    checks.iter().map(|c| c.run(ctx)).collect()
}

/// Two-digit suffix used for per-pair ids, e.g. `12` for `(1, 2)`.
pub(crate) fn pair_id(i: u8, j: u8) -> String {
    format!("{i}{j}")
}

pub(crate) fn nodes_json(set: NodeSet) -> Vec<String> {
    crate::interchange::node_set::labels(set)
}
