//! The α-coefficient expansion of the discriminant.
//!
//! `α_ij = a0_i a1_j - a0_j a1_i` over B-register basis strings, where `al`
//! are the amplitudes of `ψl`. Grouping pairs by Hamming distance `Δ`:
//!
//! ```text
//! Λ_Δ = ½ Σ_{Δ_ij = Δ} α_ij Σ_{k ∈ S_ij} α*_{i⊕e_k, j⊕e_k}
//! D   = M - 2 + Σ_{Δ=3}^{M} [ Λ_Δ + (2 - Δ)/2 Σ_{Δ_ij = Δ} |α_ij|² ]
//! ```
//!
//! with `S_ij` the set of bits where `i` and `j` differ.

use num_complex::Complex64;

use super::SchmidtForm;
use crate::error::{Error, Result};
use crate::qlinalg::matrix::ZERO;

/// Dense antisymmetric table of α over all `2^M × 2^M` string pairs.
#[derive(Debug, Clone)]
pub struct AlphaTable {
    m: usize,
    data: Vec<Complex64>,
}

impl AlphaTable {
    /// Number of B-qubits.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        1 << self.m
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim() + j]
    }

    /// `½ Σ_ij |α_ij|²`, which is 1 for orthonormal `ψ0, ψ1`.
    pub fn half_norm_sqr(&self) -> f64 {
        0.5 * self.data.iter().map(|z| z.norm_sqr()).sum::<f64>()
    }

    /// `(Λ_Δ, Σ_{Δ_ij=Δ} |α_ij|²)` for `Δ = 0..=M`.
    fn hamming_sums(&self) -> Vec<(Complex64, f64)> {
        let n = self.dim();
        let mut sums = vec![(ZERO, 0.0); self.m + 1];
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                let diff = i ^ j;
                let delta = diff.count_ones() as usize;
                let mut inner = ZERO;
                let mut bits = diff;
                while bits != 0 {
                    let e = bits & bits.wrapping_neg();
                    inner += self.get(i ^ e, j ^ e).conj();
                    bits ^= e;
                }
                sums[delta].0 += a * inner * 0.5;
                sums[delta].1 += a.norm_sqr();
            }
        }
        sums
    }
}

pub fn alpha_table(sf: &SchmidtForm) -> AlphaTable {
    let a0 = sf.psi0.amplitudes();
    let a1 = sf.psi1.amplitudes();
    let n = a0.len();
    let mut data = vec![ZERO; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let v = a0[i] * a1[j] - a0[j] * a1[i];
            data[i * n + j] = v;
            data[j * n + i] = -v;
        }
    }
    AlphaTable { m: sf.m(), data }
}

fn check_delta(at: &AlphaTable, delta: usize) -> Result<()> {
    if delta > at.m {
        return Err(Error::OutOfRange {
            what: "Hamming distance",
            value: delta,
            lo: 0,
            hi: at.m,
        });
    }
    Ok(())
}

/// `Λ_Δ` including its (rounding-level) imaginary part.
pub fn lambda_delta_raw(at: &AlphaTable, delta: usize) -> Result<Complex64> {
    check_delta(at, delta)?;
    Ok(at.hamming_sums()[delta].0)
}

pub fn lambda_delta(at: &AlphaTable, delta: usize) -> Result<f64> {
    Ok(lambda_delta_raw(at, delta)?.re)
}

/// `Σ_{Δ_ij = Δ} |α_ij|²`
pub fn alpha_weight(at: &AlphaTable, delta: usize) -> Result<f64> {
    check_delta(at, delta)?;
    Ok(at.hamming_sums()[delta].1)
}

pub fn discriminant_via_alpha(at: &AlphaTable) -> f64 {
    let sums = at.hamming_sums();
    let mut d = at.m as f64 - 2.0;
    for (delta, (lambda, weight)) in sums.iter().enumerate().skip(3) {
        d += lambda.re + (2.0 - delta as f64) / 2.0 * weight;
    }
    d
}

/// Four-qubit closed form
/// `1 - |α_{000,111} - α_{001,110} - α_{010,101} + α_{011,100}|²`,
/// strings written `i_0 i_1 i_2`.
pub fn discriminant4_closed_form(at: &AlphaTable) -> Result<f64> {
    if at.m != 3 {
        return Err(Error::QubitCount {
            got: at.m + 1,
            reason: "the closed-form discriminant is for four qubits",
        });
    }
    let idx = |s: &str| -> usize {
        s.bytes()
            .enumerate()
            .map(|(k, b)| ((b - b'0') as usize) << k)
            .sum()
    };
    let a = |s: &str, t: &str| at.get(idx(s), idx(t));
    let z = a("000", "111") - a("001", "110") - a("010", "101") + a("011", "100");
    Ok(1.0 - z.norm_sqr())
}
