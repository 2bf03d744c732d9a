//! Machine-readable reports for the verification suites.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One check inside a suite. The residual is populated on failure, in the
/// same surface syntax the expression parser accepts.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    /// Wall time; omitted from serialized reports unless timings are
    /// requested, so identical runs produce identical bytes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u128>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Pass, residual: None, ms: None }
    }

    pub fn fail(id: impl Into<String>, residual: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Fail, residual: Some(residual.into()), ms: None }
    }

    pub fn skip(id: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Skip, residual: None, ms: None }
    }

    pub fn from_residual_zero(id: impl Into<String>, zero: bool, residual: impl Fn() -> String) -> Self {
        if zero {
            Check::pass(id)
        } else {
            Check::fail(id, residual())
        }
    }
}

/// A full suite report. Checks are kept sorted by id so assembly order
/// (including any parallel evaluation) never changes the output.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub version: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        Report {
            suite: suite.into(),
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    /// Sort by check id; call before serializing.
    pub fn finalize(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    /// Strip wall times for deterministic serialization.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.checks {
            c.ms = None;
        }
        self
    }
}
