//! Seeded random ensembles.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use super::matrix::ComplexMatrix;
use super::state::{partial_trace, DensityMatrix, PureState};
use crate::error::{Error, Result};

pub const MAX_HAAR_QUBITS: usize = 12;

/// Independent stream `index` of the generator seeded with `seed`.
///
/// Streams do not overlap, so work split by index gives the same draws
/// regardless of how it is scheduled.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1/2).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn haar_random_pure(n_qubits: usize, seed: u64) -> Result<PureState> {
    haar_random_pure_with(n_qubits, &mut ChaCha20Rng::seed_from_u64(seed))
}

pub fn haar_random_pure_with<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> Result<PureState> {
    if n_qubits == 0 || n_qubits > MAX_HAAR_QUBITS {
        return Err(Error::QubitCount {
            got: n_qubits,
            reason: "Haar sampling supports 1 to 12 qubits",
        });
    }
    let amps = (0..1usize << n_qubits)
        .map(|_| complex_gaussian(rng))
        .collect();
    PureState::normalized(n_qubits, amps)
}

/// Haar-random `n × n` unitary (Gram-Schmidt on a complex Ginibre matrix).
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    loop {
        let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
        let mut degenerate = false;
        for _ in 0..n {
            let mut v: Vec<Complex64> = (0..n).map(|_| complex_gaussian(rng)).collect();
            // two passes keep the columns orthogonal to working precision
            for _ in 0..2 {
                for u in &cols {
                    let proj: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                    for (vi, ui) in v.iter_mut().zip(u) {
                        *vi -= proj * ui;
                    }
                }
            }
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-8 {
                degenerate = true;
                break;
            }
            v.iter_mut().for_each(|z| *z /= norm);
            cols.push(v);
        }
        if degenerate {
            continue;
        }
        let mut u = ComplexMatrix::zeros(n, n);
        for (j, col) in cols.iter().enumerate() {
            for (i, z) in col.iter().enumerate() {
                u[(i, j)] = *z;
            }
        }
        return u;
    }
}

/// Random PSD matrix `G G†` (unnormalized), for solver tests.
pub fn random_psd<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let rank = 1 + rng.random_range(0..n);
    let data = (0..n * rank).map(|_| complex_gaussian(rng)).collect();
    let g = ComplexMatrix::from_vec(n, rank, data).expect("shape");
    &g * &g.dagger()
}

/// Two-qubit mixed state from the Hilbert-Schmidt ensemble: the marginal
/// on qubits {0, 1} of a Haar-random 4-qubit pure state.
pub fn random_mixed_two_qubit<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let psi = haar_random_pure_with(4, rng).expect("4 qubits is in range");
    partial_trace(&psi, &[0, 1]).expect("qubits 0 and 1 exist")
}
