use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ReportOnly => "report-only",
        })
    }
}

/// First place where the two sides of a checked identity disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub params: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn pass(id: &str, params: impl Into<String>) -> Self {
        CheckResult { id: id.into(), params: params.into(), status: Status::Pass, witness: None, note: None }
    }

    pub fn fail(id: &str, params: impl Into<String>, witness: Witness) -> Self {
        CheckResult { id: id.into(), params: params.into(), status: Status::Fail, witness: Some(witness), note: None }
    }

    pub fn report(id: &str, params: impl Into<String>, note: impl Into<String>) -> Self {
        CheckResult {
            id: id.into(),
            params: params.into(),
            status: Status::ReportOnly,
            witness: None,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Pass if `first_mismatch` is `None`, otherwise fail with its witness.
    pub fn from_mismatch(id: &str, params: impl Into<String>, first_mismatch: Option<Witness>) -> Self {
        match first_mismatch {
            None => Self::pass(id, params),
            Some(w) => Self::fail(id, params, w),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<12} {:<28} {}", self.status, self.id, self.params)?;
        if let Some(w) = &self.witness {
            write!(f, "\n    first mismatch at {}: {} != {}", w.index, w.lhs, w.rhs)?;
        }
        if let Some(n) = &self.note {
            write!(f, "\n    {n}")?;
        }
        Ok(())
    }
}
