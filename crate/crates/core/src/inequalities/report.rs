use std::fmt;

use serde::{Deserialize, Serialize};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Saturated,
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Saturated => "saturated",
            Verdict::Violated => "violated",
        })
    }
}

/// `lhs ≤ rhs` or `lhs = rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    AtMost,
    Equal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub name: String,
    pub relation: Relation,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`
    pub slack: f64,
    pub verdict: Verdict,
    pub tolerance: f64,
    pub state_fingerprint: String,
    /// Qubits a per-pair or per-qubit instance refers to; empty for
    /// whole-state relations.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub qubits: Vec<usize>,
}

impl InequalityReport {
    /// `lhs ≤ rhs`: violated iff `slack < -tol`, saturated iff `|slack| ≤ tol`.
    pub fn at_most(
        name: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        state_fingerprint: impl Into<String>,
    ) -> Self {
        Self::build(
            name.into(),
            Relation::AtMost,
            lhs,
            rhs,
            tolerance,
            state_fingerprint.into(),
        )
    }

    /// `lhs = rhs`: anything outside the saturation band is a violation.
    pub fn equal(
        name: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        state_fingerprint: impl Into<String>,
    ) -> Self {
        Self::build(
            name.into(),
            Relation::Equal,
            lhs,
            rhs,
            tolerance,
            state_fingerprint.into(),
        )
    }

    fn build(
        name: String,
        relation: Relation,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        state_fingerprint: String,
    ) -> Self {
        let slack = rhs - lhs;
        let verdict = if slack.is_nan() {
            Verdict::Violated
        } else if slack.abs() <= tolerance {
            Verdict::Saturated
        } else if slack < 0.0 || relation == Relation::Equal {
            Verdict::Violated
        } else {
            Verdict::Holds
        };
        Self {
            name,
            relation,
            lhs,
            rhs,
            slack,
            verdict,
            tolerance,
            state_fingerprint,
            qubits: Vec::new(),
        }
    }

    pub fn on(mut self, qubits: &[usize]) -> Self {
        self.qubits = qubits.to_vec();
        self
    }

    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    /// Slack in the direction that matters: for equalities the negated
    /// distance from zero.
    pub fn signed_margin(&self) -> f64 {
        match self.relation {
            Relation::AtMost => self.slack,
            Relation::Equal => -self.slack.abs(),
        }
    }
}
