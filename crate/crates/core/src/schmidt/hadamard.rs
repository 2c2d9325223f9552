//! Integer matrices behind the ceiling `D ≤ M - 2`: the Hamming-neighbour
//! matrix `V` on `(Δ-1)`-bit strings and the Sylvester-Hadamard matrices
//! `P_m`, whose columns diagonalize `V`. All arithmetic is exact.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                data.push(f(x, y));
            }
        }
        Self { n, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |x, y| i64::from(x == y))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> i64 {
        self.data[x * self.n + y]
    }

    pub fn column(&self, y: usize) -> Vec<i64> {
        (0..self.n).map(|x| self.get(x, y)).collect()
    }

    pub fn scale(&self, s: i64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |x, y| {
            (0..self.n).map(|k| self.get(x, k) * other.get(k, y)).sum()
        })
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|x| (0..self.n).map(|k| self.get(x, k) * v[k]).sum())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|x| (0..x).all(|y| self.get(x, y) == self.get(y, x)))
    }
}

fn check_range(what: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::OutOfRange {
            what,
            value,
            lo,
            hi,
        });
    }
    Ok(())
}

/// `V_xy = -1` if `x` and `y` differ in every bit, `1` if they differ in
/// exactly one bit, `0` otherwise; strings of `Δ - 1` bits.
pub fn v_matrix(delta: usize) -> Result<IntMatrix> {
    check_range("delta", delta, 3, 10)?;
    let bits = delta - 1;
    let all = (1usize << bits) - 1;
    Ok(IntMatrix::from_fn(1 << bits, |x, y| {
        let d = x ^ y;
        if d == all {
            -1
        } else if d.count_ones() == 1 {
            1
        } else {
            0
        }
    }))
}

/// `(P_m)_xy = (-1)^{x·y}`, the bitwise dot product mod 2.
pub fn p_matrix(m: usize) -> Result<IntMatrix> {
    check_range("m", m, 1, 10)?;
    Ok(IntMatrix::from_fn(1 << m, |x, y| {
        if (x & y).count_ones() % 2 == 0 {
            1
        } else {
            -1
        }
    }))
}

/// `λ_y = Σ_k (-1)^{y_k} - (-1)^{Σ_k y_k}` over `bits` bits.
pub fn v_eigenvalue(y: usize, bits: usize) -> i64 {
    let ones = (y & ((1 << bits) - 1)).count_ones() as i64;
    let sum = bits as i64 - 2 * ones;
    let parity = if ones % 2 == 0 { 1 } else { -1 };
    sum - parity
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VSpectrumReport {
    pub delta: usize,
    /// `λ_y` for each column `y` of `P_{Δ-1}`.
    pub eigenvalues: Vec<i64>,
    pub max_eigenvalue: i64,
}

/// Checks that every column of `P_{Δ-1}` is an eigenvector of `V` with the
/// closed-form eigenvalue and that the largest one is `Δ - 2`. Any mismatch
/// is returned as [`Error::Falsified`].
pub fn v_spectrum_check(delta: usize) -> Result<VSpectrumReport> {
    check_range("delta", delta, 3, 8)?;
    let bits = delta - 1;
    let v = v_matrix(delta)?;
    let p = p_matrix(bits)?;
    let mut eigenvalues = Vec::with_capacity(p.dim());
    for y in 0..p.dim() {
        let col = p.column(y);
        let lambda = v_eigenvalue(y, bits);
        let image = v.mul_vec(&col);
        if let Some(x) = (0..col.len()).find(|&x| image[x] != lambda * col[x]) {
            return Err(Error::Falsified(format!(
                "delta {delta}: column {y} of P is not an eigenvector of V with eigenvalue {lambda} (row {x})"
            )));
        }
        eigenvalues.push(lambda);
    }
    let max_eigenvalue = *eigenvalues.iter().max().expect("nonempty");
    if max_eigenvalue != delta as i64 - 2 {
        return Err(Error::Falsified(format!(
            "delta {delta}: largest eigenvalue {max_eigenvalue} != {}",
            delta - 2
        )));
    }
    Ok(VSpectrumReport {
        delta,
        eigenvalues,
        max_eigenvalue,
    })
}
