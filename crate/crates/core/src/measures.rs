//! Scalar entanglement quantities of one- and two-qubit density matrices.
//!
//! The concurrence and its dual both come from the spectrum of
//! `R = √(√ρ ρ̃ √ρ)`, where `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)` is the spin flip.
//! [`r_spectrum`] obtains that spectrum as the singular values of
//! `Wᵀ (σ_y⊗σ_y) W`, where `ρ = W W†` is the eigen-ensemble restricted to
//! the support of `ρ`. Singular values are read off the Hermitian matrix
//! `[[0, T], [T†, 0]]`, whose eigenvalues are `±σ_i`, so no square root of a
//! rounding-level eigenvalue is ever taken. [`r_spectrum_via_sqrt`] is the
//! textbook route and serves as a cross-check.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qlinalg::eigen::hermitian_eig;
use crate::qlinalg::matrix::{sigma_y, ComplexMatrix, ZERO};
use crate::qlinalg::{psd_sqrt, Decomposition, DensityMatrix, PureState, Reduce};

/// Eigenvalues of `ρ` at or below this are treated as outside its support.
pub const SUPPORT_TOL: f64 = 1e-14;
/// `Tr ρ²` above `1 - PURE_TOL` selects the rank-one closed form.
pub const PURE_TOL: f64 = 1e-10;

/// `S_L(ρ) = 2 (1 - Tr ρ²)`
pub fn linear_entropy(rho: &DensityMatrix) -> f64 {
    2.0 * (1.0 - rho.purity())
}

/// `S_L(A:B) = S_L(ρ_A) + S_L(ρ_B) - S_L(ρ_AB)` for qubits `a`, `b` of any
/// state a marginal can be taken from.
pub fn linear_mutual_entropy<S: Reduce + ?Sized>(state: &S, a: usize, b: usize) -> Result<f64> {
    if a == b {
        return Err(Error::CoincidentQubits(a));
    }
    let rho_a = state.reduce(&[a])?;
    let rho_b = state.reduce(&[b])?;
    let rho_ab = state.reduce(&[a, b])?;
    Ok(linear_entropy(&rho_a) + linear_entropy(&rho_b) - linear_entropy(&rho_ab))
}

fn require_two_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.n_qubits() != 2 {
        return Err(Error::Dimension(format!(
            "expected a two-qubit state, got {} qubits",
            rho.n_qubits()
        )));
    }
    Ok(())
}

fn sigma_yy() -> ComplexMatrix {
    let y = sigma_y();
    y.kron(&y)
}

/// `ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`, conjugation taken in the computational basis.
pub fn spin_flip(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    require_two_qubit(rho)?;
    let yy = sigma_yy();
    Ok(&(&yy * &rho.matrix().conj()) * &yy)
}

/// The four eigenvalues of `R`, descending and non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RSpectrum {
    pub lambdas: [f64; 4],
}

impl RSpectrum {
    pub fn sum(&self) -> f64 {
        self.lambdas.iter().sum()
    }

    /// `Σ λ_i² = Tr R²`
    pub fn sum_of_squares(&self) -> f64 {
        self.lambdas.iter().map(|x| x * x).sum()
    }

    /// `λ_1 - λ_2 - λ_3 - λ_4`, before clamping.
    pub fn wootters_gap(&self) -> f64 {
        let [l1, l2, l3, l4] = self.lambdas;
        l1 - l2 - l3 - l4
    }

    /// `X = 2 λ_1 (λ_2 + λ_3 + λ_4)`
    pub fn x_split(&self) -> f64 {
        let [l1, l2, l3, l4] = self.lambdas;
        2.0 * l1 * (l2 + l3 + l4)
    }

    /// `Y = 2 (λ_2 λ_3 + λ_2 λ_4 + λ_3 λ_4)`
    pub fn y_split(&self) -> f64 {
        let [_, l2, l3, l4] = self.lambdas;
        2.0 * (l2 * l3 + l2 * l4 + l3 * l4)
    }

    fn from_values(mut values: Vec<f64>) -> Self {
        values.iter_mut().for_each(|x| *x = x.max(0.0));
        values.sort_by(|a, b| b.total_cmp(a));
        values.resize(4, 0.0);
        Self {
            lambdas: [values[0], values[1], values[2], values[3]],
        }
    }
}

pub fn r_spectrum(rho: &DensityMatrix) -> Result<RSpectrum> {
    require_two_qubit(rho)?;
    let eig = hermitian_eig(rho.matrix())?;
    let rank = if rho.purity() > 1.0 - PURE_TOL {
        1
    } else {
        eig.eigenvalues.iter().filter(|&&m| m > SUPPORT_TOL).count()
    };
    if rank == 0 {
        return Err(Error::NotPsd(eig.eigenvalues[0]));
    }

    // Columns √μ_i e_i of W, for the support only.
    let yy = sigma_yy();
    let weighted: Vec<Vec<Complex64>> = (0..rank)
        .map(|i| {
            let root = eig.eigenvalues[i].sqrt();
            eig.eigenvector(i).into_iter().map(|z| z * root).collect()
        })
        .collect();
    let flipped: Vec<Vec<Complex64>> = weighted.iter().map(|w| yy.mul_vec(w)).collect();

    // T_ij = w_iᵀ (σ_y⊗σ_y) w_j, embedded in [[0, T], [T†, 0]].
    let mut block = ComplexMatrix::zeros(2 * rank, 2 * rank);
    for i in 0..rank {
        for j in 0..rank {
            let t: Complex64 = weighted[i]
                .iter()
                .zip(&flipped[j])
                .map(|(a, b)| a * b)
                .sum();
            block[(i, rank + j)] = t;
            block[(rank + j, i)] = t.conj();
        }
    }
    let singular = hermitian_eig(&block)?;
    Ok(RSpectrum::from_values(
        singular.eigenvalues[..rank].to_vec(),
    ))
}

/// `λ_i = √h_i` with `h_i` the eigenvalues of `√ρ ρ̃ √ρ`. Loses about half
/// the significant digits for rank-deficient `ρ`.
pub fn r_spectrum_via_sqrt(rho: &DensityMatrix) -> Result<RSpectrum> {
    let flipped = spin_flip(rho)?;
    let root = psd_sqrt(rho.matrix())?;
    let mut h = &(&root * &flipped) * &root;
    // restore exact Hermiticity lost to rounding in the triple product
    let n = h.rows();
    for i in 0..n {
        for j in i..n {
            let avg = (h[(i, j)] + h[(j, i)].conj()) * 0.5;
            h[(i, j)] = avg;
            h[(j, i)] = avg.conj();
        }
    }
    let eig = hermitian_eig(&h)?;
    Ok(RSpectrum::from_values(
        eig.eigenvalues.iter().map(|x| x.max(0.0).sqrt()).collect(),
    ))
}

/// `C = max{0, λ_1 - λ_2 - λ_3 - λ_4}`, clamped to `[0, 1]`.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    Ok(concurrence_from(&r_spectrum(rho)?))
}

fn concurrence_from(spectrum: &RSpectrum) -> f64 {
    spectrum.wootters_gap().clamp(0.0, 1.0)
}

/// `C_a = Tr R = Σ λ_i`
pub fn concurrence_of_assistance(rho: &DensityMatrix) -> Result<f64> {
    Ok(r_spectrum(rho)?.sum())
}

/// Every scalar measure of a two-qubit state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureSet {
    pub s_lin_a: f64,
    pub s_lin_b: f64,
    pub s_lin_ab: f64,
    pub s_mutual: f64,
    pub concurrence: f64,
    pub coa: f64,
    pub tangle: f64,
    pub tangle_a: f64,
    pub x_split: f64,
    pub y_split: f64,
    pub spectrum: RSpectrum,
}

/// Fills a [`MeasureSet`] for a two-qubit state. The single-qubit entropies
/// come from the marginals of `rho` itself.
pub fn tangles(rho: &DensityMatrix) -> Result<MeasureSet> {
    require_two_qubit(rho)?;
    let labels = rho.qubit_labels();
    let s_lin_a = linear_entropy(&rho.reduce(&[labels[0]])?);
    let s_lin_b = linear_entropy(&rho.reduce(&[labels[1]])?);
    let s_lin_ab = linear_entropy(rho);
    let spectrum = r_spectrum(rho)?;
    let concurrence = concurrence_from(&spectrum);
    let coa = spectrum.sum();
    Ok(MeasureSet {
        s_lin_a,
        s_lin_b,
        s_lin_ab,
        s_mutual: s_lin_a + s_lin_b - s_lin_ab,
        concurrence,
        coa,
        tangle: concurrence * concurrence,
        tangle_a: coa * coa,
        x_split: spectrum.x_split(),
        y_split: spectrum.y_split(),
        spectrum,
    })
}

/// Concurrence of a pure two-qubit vector, `√S_L` of its one-qubit marginal.
pub fn pure_concurrence(psi: &[Complex64]) -> Result<f64> {
    if psi.len() != 4 {
        return Err(Error::Dimension(format!(
            "pure two-qubit vector has 4 entries, got {}",
            psi.len()
        )));
    }
    let state = PureState::with_tolerance(2, psi.to_vec(), 1e-9)?;
    Ok(linear_entropy(&state.reduce(&[0])?).max(0.0).sqrt())
}

/// `Σ_j p_j C(ψ_j)`; lies between `C(ρ)` and `C_a(ρ)` for any decomposition.
pub fn decomposition_average_concurrence(d: &Decomposition) -> Result<f64> {
    d.weights
        .iter()
        .zip(&d.states)
        .map(|(p, psi)| Ok(p * pure_concurrence(psi)?))
        .sum()
}

/// `|<ψ| (σ_y⊗σ_y) |ψ*>|`, the closed form for pure two-qubit states.
pub fn pure_concurrence_closed_form(psi: &[Complex64]) -> f64 {
    let flipped = sigma_yy().mul_vec(&psi.iter().map(|z| z.conj()).collect::<Vec<_>>());
    psi.iter()
        .zip(&flipped)
        .map(|(a, b)| a.conj() * b)
        .fold(ZERO, |acc, z| acc + z)
        .norm()
}
