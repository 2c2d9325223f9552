use serde::Serialize;

use crate::error::{Error, Result};
use crate::measures::linear_entropy;
use crate::qlinalg::{PureState, Reduce};

/// Tangles of a pure state across every one-qubit and two-qubit cut.
/// For a pure state the tangle across a cut is the linear entropy of
/// either side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BipartitionTangles {
    pub n_qubits: usize,
    /// `τ^{k:rest}`
    pub single: Vec<f64>,
    /// `τ^{kk':rest}`, symmetric, zero on the diagonal.
    pub pair: Vec<Vec<f64>>,
    /// `τ_1^k = Σ_{l≠k} τ^{l:rest}`
    pub tau1_k: Vec<f64>,
    /// `τ_2^k = Σ_{l≠k} τ^{kl:rest}`
    pub tau2_k: Vec<f64>,
    /// `τ_1 = Σ_k τ^{k:rest}`
    pub tau1: f64,
    /// `τ_2 = ½ Σ_k τ_2^k`
    pub tau2: f64,
}

#[allow(clippy::needless_range_loop)]
pub fn bipartition_tangles(psi: &PureState) -> Result<BipartitionTangles> {
    let n = psi.n_qubits();
    if n < 3 {
        return Err(Error::QubitCount {
            got: n,
            reason: "bipartition tangles need at least 3 qubits",
        });
    }
    let single = (0..n)
        .map(|k| Ok(linear_entropy(&psi.reduce(&[k])?)))
        .collect::<Result<Vec<f64>>>()?;
    let mut pair = vec![vec![0.0; n]; n];
    for k in 0..n {
        for l in k + 1..n {
            let t = linear_entropy(&psi.reduce(&[k, l])?);
            pair[k][l] = t;
            pair[l][k] = t;
        }
    }
    let tau1: f64 = single.iter().sum();
    let tau1_k: Vec<f64> = single.iter().map(|t| tau1 - t).collect();
    let tau2_k: Vec<f64> = pair.iter().map(|row| row.iter().sum()).collect();
    let tau2 = 0.5 * tau2_k.iter().sum::<f64>();
    Ok(BipartitionTangles {
        n_qubits: n,
        single,
        pair,
        tau1_k,
        tau2_k,
        tau1,
        tau2,
    })
}
