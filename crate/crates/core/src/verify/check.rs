use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactalg::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    ExactIdentity,
    NumericResidual,
    ComparisonReport,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Reported,
}

/// Canonical polynomial text for exact checks, a float for numeric ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Residual {
    Float(f64),
    Exact(String),
}

impl std::fmt::Display for Residual {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Residual::Float(v) => write!(f, "{v:e}"),
            Residual::Exact(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub kind: CheckKind,
    pub status: Status,
    pub residual: Residual,
    pub citation: String,
    pub params: BTreeMap<String, String>,
}

impl CheckResult {
    /// Passes iff the residual polynomial is identically zero.
    pub fn exact(id: impl Into<String>, residual: &Poly, citation: impl Into<String>) -> Self {
        let status = if residual.is_zero() { Status::Pass } else { Status::Fail };
        Self::build(id, CheckKind::ExactIdentity, status, Residual::Exact(residual.to_string()), citation)
    }

    /// Passes iff `|residual| < tol`; non-finite residuals fail.
    pub fn numeric(id: impl Into<String>, residual: f64, tol: f64, citation: impl Into<String>) -> Self {
        let (status, value) = if residual.is_finite() {
            let s = if residual.abs() < tol { Status::Pass } else { Status::Fail };
            (s, Residual::Float(residual))
        } else {
            (Status::Fail, Residual::Exact(residual.to_string()))
        };
        Self::build(id, CheckKind::NumericResidual, status, value, citation)
            .with_param("tol", format!("{tol:e}"))
    }

    /// Informational comparison; never affects the pass/fail outcome.
    pub fn report(id: impl Into<String>, residual: &Poly, citation: impl Into<String>) -> Self {
        Self::build(
            id,
            CheckKind::ComparisonReport,
            Status::Reported,
            Residual::Exact(residual.to_string()),
            citation,
        )
    }

    /// A check whose computation failed; always a failure.
    pub fn error(id: impl Into<String>, kind: CheckKind, message: impl Into<String>, citation: impl Into<String>) -> Self {
        Self::build(id, kind, Status::Fail, Residual::Exact(format!("error: {}", message.into())), citation)
    }

    pub fn with_param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn build(
        id: impl Into<String>,
        kind: CheckKind,
        status: Status,
        residual: Residual,
        citation: impl Into<String>,
    ) -> Self {
        let citation = citation.into();
        debug_assert!(!citation.is_empty());
        CheckResult {
            id: id.into(),
            kind,
            status,
            residual,
            citation,
            params: BTreeMap::new(),
        }
    }
}
