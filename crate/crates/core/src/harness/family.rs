use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::inequalities::{bipartition_tangles, Checker, InequalityReport, StateProfile, Verdict};
use crate::qlinalg::{state_family, StateFamily};
use crate::schmidt::discriminant;

pub const FAMILY_SCHEMA: &str = "monogamy.family/v1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyRow {
    pub family: StateFamily,
    pub n_qubits: usize,
    pub s_lin_a: f64,
    pub sum_tangle: f64,
    pub sum_tangle_a: f64,
    pub discriminant: f64,
    pub tau1: f64,
    pub tau2: f64,
    /// Worst verdict per checker over its instances.
    pub verdicts: BTreeMap<String, Verdict>,
    #[serde(skip)]
    pub reports: Vec<InequalityReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyTable {
    pub schema: &'static str,
    pub max_qubits: usize,
    pub rows: Vec<FamilyRow>,
}

impl FamilyTable {
    pub fn any_violation(&self) -> bool {
        self.rows
            .iter()
            .any(|r| r.verdicts.values().any(|v| *v == Verdict::Violated))
    }

    pub fn row(&self, family: StateFamily, n_qubits: usize) -> Option<&FamilyRow> {
        self.rows
            .iter()
            .find(|r| r.family == family && r.n_qubits == n_qubits)
    }
}

fn worse(a: Verdict, b: Verdict) -> Verdict {
    let rank = |v: Verdict| match v {
        Verdict::Holds => 0,
        Verdict::Saturated => 1,
        Verdict::Violated => 2,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

pub fn family_row(checker: &Checker, family: StateFamily, n: usize) -> Result<FamilyRow> {
    let psi = state_family(family, n)?;
    let p = StateProfile::new(&psi)?;
    let b = bipartition_tangles(&psi)?;
    let reports = checker.evaluate_all(&psi)?;
    let mut verdicts = BTreeMap::new();
    for r in &reports {
        verdicts
            .entry(r.name.clone())
            .and_modify(|v| *v = worse(*v, r.verdict))
            .or_insert(r.verdict);
    }
    Ok(FamilyRow {
        family,
        n_qubits: n,
        s_lin_a: p.s_lin_a,
        sum_tangle: p.sum_tangle(),
        sum_tangle_a: p.sum_tangle_a(),
        discriminant: discriminant(&psi)?.total,
        tau1: b.tau1,
        tau2: b.tau2,
        verdicts,
        reports,
    })
}

/// GHZ, W and product rows for `N = 3..=max_qubits`.
pub fn cmd_family(max_qubits: usize, tolerance: f64) -> Result<FamilyTable> {
    if !(3..=super::config::MAX_QUBITS).contains(&max_qubits) {
        return Err(Error::Config(format!(
            "max qubits {max_qubits} outside 3..={}",
            super::config::MAX_QUBITS
        )));
    }
    let checker = Checker::new(tolerance)?;
    let mut rows = Vec::new();
    for family in [StateFamily::Ghz, StateFamily::W, StateFamily::Product] {
        for n in 3..=max_qubits {
            rows.push(family_row(&checker, family, n)?);
        }
    }
    Ok(FamilyTable {
        schema: FAMILY_SCHEMA,
        max_qubits,
        rows,
    })
}
