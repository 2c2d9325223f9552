//! Pure-state decompositions `ρ = Σ_j p_j |ψ_j><ψ_j|` of a density matrix.
//!
//! Every decomposition with `m` members arises from an `m × m` unitary `U`
//! acting on the eigen-ensemble: `|φ_j> = Σ_i U_ji √μ_i |e_i>` with
//! `p_j = <φ_j|φ_j>`. Sampling `U` from the Haar measure therefore samples
//! the space of decompositions.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::eigen::{hermitian_eig, PSD_FLOOR};
use super::matrix::{ComplexMatrix, ZERO};
use super::random::random_unitary;
use super::state::DensityMatrix;
use crate::error::{Error, Result};

/// Eigenvalues at or below this count as zero when computing the rank.
pub const RANK_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub weights: Vec<f64>,
    /// Normalized member states.
    pub states: Vec<Vec<Complex64>>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `Σ_j p_j |ψ_j><ψ_j|`
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.states.first().map_or(0, Vec::len);
        let mut m = ComplexMatrix::zeros(d, d);
        for (p, psi) in self.weights.iter().zip(&self.states) {
            let term = ComplexMatrix::outer(psi, psi).scale(Complex64::new(*p, 0.0));
            m = &m + &term;
        }
        m
    }
}

pub fn rank(rho: &DensityMatrix) -> Result<usize> {
    let eig = hermitian_eig(rho.matrix())?;
    Ok(eig.eigenvalues.iter().filter(|&&x| x > RANK_TOL).count())
}

pub fn sample_decomposition(rho: &DensityMatrix, size: usize, seed: u64) -> Result<Decomposition> {
    sample_decomposition_with(rho, size, &mut ChaCha20Rng::seed_from_u64(seed))
}

pub fn sample_decomposition_with<R: Rng + ?Sized>(
    rho: &DensityMatrix,
    size: usize,
    rng: &mut R,
) -> Result<Decomposition> {
    let r = rank(rho)?;
    if size < r || size == 0 {
        return Err(Error::DecompositionTooSmall { size, rank: r });
    }
    let u = random_unitary(size, rng);
    decomposition_from_unitary(rho, &u)
}

/// Decomposition generated by an explicit `m × m` unitary.
pub fn decomposition_from_unitary(rho: &DensityMatrix, u: &ComplexMatrix) -> Result<Decomposition> {
    if !u.is_square() {
        return Err(Error::Dimension("mixing matrix must be square".into()));
    }
    let size = u.rows();
    let eig = hermitian_eig(rho.matrix())?;
    let r = eig.eigenvalues.iter().filter(|&&x| x > RANK_TOL).count();
    if size < r || size == 0 {
        return Err(Error::DecompositionTooSmall { size, rank: r });
    }
    if let Some(&min) = eig.eigenvalues.last() {
        if min < -PSD_FLOOR {
            return Err(Error::NotPsd(min));
        }
    }
    let d = rho.dim();
    let used = size.min(d);
    let roots: Vec<f64> = eig.eigenvalues[..used]
        .iter()
        .map(|&x| x.max(0.0).sqrt())
        .collect();

    let mut weights = Vec::with_capacity(size);
    let mut states = Vec::with_capacity(size);
    for j in 0..size {
        let mut phi = vec![ZERO; d];
        for (i, root) in roots.iter().enumerate() {
            let coeff = u[(j, i)] * root;
            for (k, slot) in phi.iter_mut().enumerate() {
                *slot += coeff * eig.eigenvectors[(k, i)];
            }
        }
        let p: f64 = phi.iter().map(|z| z.norm_sqr()).sum();
        if p <= f64::MIN_POSITIVE {
            continue;
        }
        let norm = p.sqrt();
        phi.iter_mut().for_each(|z| *z /= norm);
        weights.push(p);
        states.push(phi);
    }
    Ok(Decomposition { weights, states })
}
