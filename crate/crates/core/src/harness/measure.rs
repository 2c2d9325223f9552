use std::path::Path;

use serde::Serialize;

use super::config::RunConfig;
use crate::error::Result;
use crate::inequalities::{
    bipartition_tangles, with_party_a, BipartitionTangles, Checker, InequalityReport,
};
use crate::measures::{tangles, MeasureSet};
use crate::qlinalg::{PureState, Reduce, StateFile};
use crate::schmidt::{discriminant, Discriminant};

pub const MEASURE_SCHEMA: &str = "monogamy.measure/v1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairMeasures {
    pub a: usize,
    pub b: usize,
    #[serde(flatten)]
    pub measures: MeasureSet,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureReport {
    pub schema: &'static str,
    pub n_qubits: usize,
    pub fingerprint: String,
    /// Every pair `a < b`.
    pub pairs: Vec<PairMeasures>,
    /// Qubit 0 as party A, one entry per remaining qubit.
    pub discriminant: Discriminant,
    /// Total discriminant with each qubit in turn as party A.
    pub discriminant_by_party: Vec<f64>,
    pub bipartitions: Option<BipartitionTangles>,
    pub reports: Vec<InequalityReport>,
}

impl MeasureReport {
    pub fn any_violation(&self) -> bool {
        self.reports.iter().any(|r| r.is_violated())
    }

    pub fn report(&self, name: &str) -> Option<&InequalityReport> {
        self.reports.iter().find(|r| r.name == name)
    }
}

pub fn measure_state(psi: &PureState, tolerance: f64) -> Result<MeasureReport> {
    let n = psi.n_qubits();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            pairs.push(PairMeasures {
                a,
                b,
                measures: tangles(&psi.reduce(&[a, b])?)?,
            });
        }
    }
    let discriminant_by_party = (0..n)
        .map(|q| Ok(discriminant(&with_party_a(psi, q)?)?.total))
        .collect::<Result<Vec<_>>>()?;
    Ok(MeasureReport {
        schema: MEASURE_SCHEMA,
        n_qubits: n,
        fingerprint: psi.fingerprint(),
        pairs,
        discriminant: discriminant(psi)?,
        discriminant_by_party,
        bipartitions: if n >= 3 {
            Some(bipartition_tangles(psi)?)
        } else {
            None
        },
        reports: Checker::new(tolerance)?.evaluate_all(psi)?,
    })
}

/// Loads a state file and measures it. Amplitudes whose norm is off by
/// more than the configured tolerance are rejected, never renormalized.
pub fn cmd_measure(state_file: &Path, config: &RunConfig) -> Result<MeasureReport> {
    let text = std::fs::read_to_string(state_file)?;
    let psi = StateFile::parse(&text)?.into_state(config.tolerance)?;
    measure_state(&psi, config.tolerance)
}
