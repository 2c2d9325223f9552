//! Schmidt decomposition of qubit 0 against the remaining `M = N - 1` qubits
//! and the discriminant of the resulting σ matrices.
//!
//! With `|Ψ> = √p0 |0>|ψ0> + √p1 |1>|ψ1>` and
//! `σ_k^{ll'} = Tr_{≠k} |ψl><ψl'|`, the discriminant of B-qubit `k` is
//! `D_k = Tr(σ_k^{00} σ_k^{11} - σ_k^{01} σ_k^{10})` and `D = Σ_k D_k` over
//! all `M` B-qubits. It controls the sum of linear mutual entropies through
//! `S_L(A:B_k) = 4 p0 p1 (1 - D_k)`.
//!
//! B-register index `j` has B-qubit `k` (original qubit `k + 1`) in bit `k`.

mod alpha;
mod hadamard;

pub use alpha::{
    alpha_table, alpha_weight, discriminant4_closed_form, discriminant_via_alpha, lambda_delta,
    lambda_delta_raw, AlphaTable,
};
pub use hadamard::{p_matrix, v_matrix, v_spectrum_check, IntMatrix, VSpectrumReport};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qlinalg::matrix::{ComplexMatrix, ZERO};
use crate::qlinalg::{hermitian_eig, PureState, Reduce};

/// Schmidt weights below this count as zero.
pub const DEGENERATE_TOL: f64 = 1e-12;
const PHASE_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct SchmidtForm {
    pub p0: f64,
    pub p1: f64,
    /// States of the `M` B-qubits.
    pub psi0: PureState,
    pub psi1: PureState,
    /// The Schmidt basis of qubit A, `|u0>, |u1>`.
    pub a_basis: [[Complex64; 2]; 2],
}

impl SchmidtForm {
    /// Number of B-qubits.
    pub fn m(&self) -> usize {
        self.psi0.n_qubits()
    }

    pub fn is_degenerate(&self) -> bool {
        self.p1 < DEGENERATE_TOL
    }

    /// `√p0 |u0>|ψ0> + √p1 |u1>|ψ1>`
    pub fn reassemble(&self) -> PureState {
        let dim_b = self.psi0.dim();
        let mut amps = vec![ZERO; 2 * dim_b];
        let weights = [self.p0.sqrt(), self.p1.sqrt()];
        let states = [self.psi0.amplitudes(), self.psi1.amplitudes()];
        for l in 0..2 {
            for (j, b) in states[l].iter().enumerate() {
                for a in 0..2 {
                    amps[a + 2 * j] += self.a_basis[l][a] * b * weights[l];
                }
            }
        }
        PureState::normalized(self.m() + 1, amps).expect("Schmidt reassembly is normalized")
    }

    /// `S_L(ρ_A) = 4 p0 p1`
    pub fn linear_entropy_a(&self) -> f64 {
        4.0 * self.p0 * self.p1
    }
}

/// Schmidt form across the cut qubit 0 | qubits 1..N.
///
/// Phase convention: the first amplitude of each `ψl` with modulus above
/// 1e-12 is real and positive.
pub fn schmidt_cut(psi: &PureState) -> Result<SchmidtForm> {
    let n = psi.n_qubits();
    if n < 2 {
        return Err(Error::QubitCount {
            got: n,
            reason: "a Schmidt cut needs at least 2 qubits",
        });
    }
    let rho_a = psi.reduce(&[0])?;
    let eig = hermitian_eig(rho_a.matrix())?;
    let p1 = eig.eigenvalues[1].clamp(0.0, 1.0);
    let p0 = 1.0 - p1;
    let mut basis = [eig.eigenvector(0), eig.eigenvector(1)];

    let dim_b = psi.dim() / 2;
    let amps = psi.amplitudes();
    let project = |u: &[Complex64], weight: f64| -> Vec<Complex64> {
        let scale = 1.0 / weight.sqrt();
        (0..dim_b)
            .map(|j| (u[0].conj() * amps[2 * j] + u[1].conj() * amps[2 * j + 1]) * scale)
            .collect()
    };

    let mut psi0 = project(&basis[0], p0);
    let mut psi1 = if p1 < DEGENERATE_TOL {
        orthogonal_completion(&psi0)
    } else {
        project(&basis[1], p1)
    };
    fix_phase(&mut psi0, &mut basis[0]);
    fix_phase(&mut psi1, &mut basis[1]);

    let m = n - 1;
    Ok(SchmidtForm {
        p0,
        p1,
        psi0: PureState::normalized(m, psi0)?,
        psi1: PureState::normalized(m, psi1)?,
        a_basis: [[basis[0][0], basis[0][1]], [basis[1][0], basis[1][1]]],
    })
}

/// Rotates `state` so its first non-negligible amplitude is real positive,
/// moving the opposite phase onto the partner A vector.
fn fix_phase(state: &mut [Complex64], partner: &mut [Complex64]) {
    if let Some(first) = state.iter().find(|z| z.norm() > PHASE_TOL) {
        let phase = first / first.norm();
        state.iter_mut().for_each(|z| *z /= phase);
        partner.iter_mut().for_each(|z| *z *= phase);
    }
}

/// Unit vector orthogonal to `v`: Gram-Schmidt of the first computational
/// basis vector that keeps at least half its weight.
fn orthogonal_completion(v: &[Complex64]) -> Vec<Complex64> {
    for j in 0..v.len() {
        let overlap = v[j].conj();
        let mut w: Vec<Complex64> = v.iter().map(|z| -overlap * z).collect();
        w[j] += 1.0;
        let norm_sqr: f64 = w.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr >= 0.5 {
            let norm = norm_sqr.sqrt();
            w.iter_mut().for_each(|z| *z /= norm);
            return w;
        }
    }
    unreachable!("some basis vector has overlap at most 1/2 with a unit vector of dimension >= 2")
}

/// The four σ matrices of one B-qubit, indexed `[l][l']`.
#[derive(Debug, Clone)]
pub struct SigmaBlock(pub [[ComplexMatrix; 2]; 2]);

impl SigmaBlock {
    pub fn get(&self, l: usize, lp: usize) -> &ComplexMatrix {
        &self.0[l][lp]
    }

    /// `Tr(σ^{00} σ^{11} - σ^{01} σ^{10})`
    pub fn discriminant(&self) -> Complex64 {
        self.get(0, 0).trace_product(self.get(1, 1)) - self.get(0, 1).trace_product(self.get(1, 0))
    }
}

#[derive(Debug, Clone)]
pub struct SigmaSet {
    pub blocks: Vec<SigmaBlock>,
}

/// `σ_k^{ll'}[r][c] = Σ_rest ψl[.. r ..] ψl'[.. c ..]*` with bit `k` set to
/// `r` and `c` respectively.
pub fn sigma_matrices(sf: &SchmidtForm) -> SigmaSet {
    let m = sf.m();
    let states = [sf.psi0.amplitudes(), sf.psi1.amplitudes()];
    let dim_b = sf.psi0.dim();
    let blocks = (0..m)
        .map(|k| {
            let bit = 1usize << k;
            let build = |l: usize, lp: usize| {
                let mut s = ComplexMatrix::zeros(2, 2);
                for env in (0..dim_b).filter(|j| j & bit == 0) {
                    for r in 0..2 {
                        for c in 0..2 {
                            s[(r, c)] +=
                                states[l][env | (r * bit)] * states[lp][env | (c * bit)].conj();
                        }
                    }
                }
                s
            };
            SigmaBlock([[build(0, 0), build(0, 1)], [build(1, 0), build(1, 1)]])
        })
        .collect();
    SigmaSet { blocks }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discriminant {
    /// `D_k` for B-qubit `k` (original qubit `k + 1`).
    pub per_k: Vec<f64>,
    pub total: f64,
}

pub fn discriminant_direct(sf: &SchmidtForm) -> Discriminant {
    let per_k: Vec<f64> = sigma_matrices(sf)
        .blocks
        .iter()
        .map(|b| b.discriminant().re)
        .collect();
    let total = per_k.iter().sum();
    Discriminant { per_k, total }
}

/// Discriminant of a pure state with qubit 0 as party A.
pub fn discriminant(psi: &PureState) -> Result<Discriminant> {
    Ok(discriminant_direct(&schmidt_cut(psi)?))
}

/// `4 p0 p1 (1 - D_k)` for each B-qubit; equals `S_L(A:B_k)`.
pub fn mutual_entropies_from_discriminant(sf: &SchmidtForm, d: &Discriminant) -> Vec<f64> {
    let s = sf.linear_entropy_a();
    d.per_k.iter().map(|dk| s * (1.0 - dk)).collect()
}
