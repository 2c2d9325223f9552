use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::eigen::hermitian_eig;
use super::matrix::{ComplexMatrix, ONE, ZERO};
use crate::error::{Error, Result};

pub const NORM_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
pub const EIGEN_FLOOR: f64 = 1e-10;
/// Largest register the dense routines accept.
pub const MAX_QUBITS: usize = 16;

/// Pure state of `n` qubits. Basis index `i` has qubit `k` in state
/// `(i >> k) & 1`; qubit 0 plays the role of party A.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::with_tolerance(n_qubits, amplitudes, NORM_TOL)
    }

    /// Like [`PureState::new`] with a caller-chosen tolerance on `Σ|a_i|² - 1`.
    pub fn with_tolerance(n_qubits: usize, amplitudes: Vec<Complex64>, tol: f64) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::QubitCount {
                got: n_qubits,
                reason: "must be between 1 and 16",
            });
        }
        if amplitudes.len() != 1 << n_qubits {
            return Err(Error::Dimension(format!(
                "{} amplitudes for {} qubits (expected {})",
                amplitudes.len(),
                n_qubits,
                1usize << n_qubits
            )));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() > tol {
            return Err(Error::NotNormalized(short_float(norm_sqr.sqrt())));
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn normalized(n_qubits: usize, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized(short_float(norm)));
        }
        for a in &mut amplitudes {
            *a /= norm;
        }
        Self::new(n_qubits, amplitudes)
    }

    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::Dimension(format!("basis index {index} >= {dim}")));
        }
        let mut amps = vec![ZERO; dim];
        amps[index] = ONE;
        Self::new(n_qubits, amps)
    }

    /// Tensor product; `self` occupies the low qubits.
    pub fn tensor(&self, other: &PureState) -> Result<Self> {
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for b in &other.amplitudes {
            for a in &self.amplitudes {
                amps.push(a * b);
            }
        }
        Self::with_tolerance(self.n_qubits + other.n_qubits, amps, 1e-10)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn density_matrix(&self) -> DensityMatrix {
        DensityMatrix {
            qubit_labels: (0..self.n_qubits).collect(),
            matrix: ComplexMatrix::outer(&self.amplitudes, &self.amplitudes),
        }
    }

    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Applies a 2×2 unitary to qubit `k`.
    pub fn apply_single_qubit(&self, k: usize, u: &ComplexMatrix) -> Result<Self> {
        self.check_qubit(k)?;
        if u.rows() != 2 || u.cols() != 2 {
            return Err(Error::Dimension("single-qubit gate must be 2x2".into()));
        }
        let mut amps = self.amplitudes.clone();
        let bit = 1usize << k;
        for i in 0..self.dim() {
            if i & bit == 0 {
                let a0 = self.amplitudes[i];
                let a1 = self.amplitudes[i | bit];
                amps[i] = u[(0, 0)] * a0 + u[(0, 1)] * a1;
                amps[i | bit] = u[(1, 0)] * a0 + u[(1, 1)] * a1;
            }
        }
        Self::with_tolerance(self.n_qubits, amps, 1e-10)
    }

    /// Exchanges the roles of qubits `a` and `b`.
    pub fn swap_qubits(&self, a: usize, b: usize) -> Result<Self> {
        self.check_qubit(a)?;
        self.check_qubit(b)?;
        if a == b {
            return Ok(self.clone());
        }
        let mut amps = vec![ZERO; self.dim()];
        for (i, amp) in self.amplitudes.iter().enumerate() {
            let ba = (i >> a) & 1;
            let bb = (i >> b) & 1;
            let j = (i & !(1 << a) & !(1 << b)) | (ba << b) | (bb << a);
            amps[j] = *amp;
        }
        Ok(Self {
            n_qubits: self.n_qubits,
            amplitudes: amps,
        })
    }

    /// Short stable hash of the amplitude bits.
    pub fn fingerprint(&self) -> String {
        fingerprint_complex(&self.amplitudes)
    }

    fn check_qubit(&self, k: usize) -> Result<()> {
        if k >= self.n_qubits {
            return Err(Error::QubitOutOfRange {
                index: k,
                n_qubits: self.n_qubits,
            });
        }
        Ok(())
    }

    pub fn to_file(&self) -> StateFile {
        StateFile {
            n_qubits: self.n_qubits,
            amplitudes: self.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        }
    }
}

pub(crate) fn fingerprint_complex(values: &[Complex64]) -> String {
    let mut h = Sha256::new();
    for v in values {
        h.update(v.re.to_le_bytes());
        h.update(v.im.to_le_bytes());
    }
    let digest = h.finalize();
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

fn short_float(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0');
    s.trim_end_matches('.').to_string()
}

/// On-disk state format: `{"n_qubits": N, "amplitudes": [[re, im], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct StateFile {
    pub n_qubits: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

impl StateFile {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::StateFile(e.to_string()))
    }

    /// Amplitudes are checked, never renormalized.
    pub fn into_state(self, tol: f64) -> Result<PureState> {
        let amps = self
            .amplitudes
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        PureState::with_tolerance(self.n_qubits, amps, tol)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("state file serializes")
    }
}

/// Density matrix over a labeled qubit subset. Local index bit `j`
/// corresponds to original qubit `qubit_labels[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    qubit_labels: Vec<usize>,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and the spectrum floor.
    pub fn new(qubit_labels: Vec<usize>, matrix: ComplexMatrix) -> Result<Self> {
        let m = qubit_labels.len();
        if m == 0 {
            return Err(Error::EmptyKeep);
        }
        if !matrix.is_square() || matrix.rows() != 1 << m {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for {} qubits",
                matrix.rows(),
                matrix.cols(),
                m
            )));
        }
        check_distinct(&qubit_labels)?;
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::BadTrace(tr.re));
        }
        let eig = hermitian_eig(&matrix)?;
        let min = eig.eigenvalues.last().copied().unwrap_or(0.0);
        if min < -EIGEN_FLOOR {
            return Err(Error::NotPsd(min));
        }
        Ok(Self {
            qubit_labels,
            matrix,
        })
    }

    /// Two-qubit state with labels `(0, 1)`.
    pub fn two_qubit(matrix: ComplexMatrix) -> Result<Self> {
        Self::new(vec![0, 1], matrix)
    }

    pub fn maximally_mixed(labels: Vec<usize>) -> Self {
        let d = 1usize << labels.len();
        Self {
            qubit_labels: labels,
            matrix: ComplexMatrix::identity(d).scale(Complex64::new(1.0 / d as f64, 0.0)),
        }
    }

    pub fn qubit_labels(&self) -> &[usize] {
        &self.qubit_labels
    }

    pub fn n_qubits(&self) -> usize {
        self.qubit_labels.len()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// `Tr ρ²`
    pub fn purity(&self) -> f64 {
        self.matrix.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Applies `U ρ U†` for a unitary of matching dimension.
    pub fn conjugate_by(&self, u: &ComplexMatrix) -> Result<Self> {
        if u.rows() != self.dim() || !u.is_square() {
            return Err(Error::Dimension("unitary dimension mismatch".into()));
        }
        let m = &(u * &self.matrix) * &u.dagger();
        Ok(Self {
            qubit_labels: self.qubit_labels.clone(),
            matrix: m,
        })
    }

    pub fn fingerprint(&self) -> String {
        fingerprint_complex(self.matrix.as_slice())
    }

    pub(crate) fn from_parts_unchecked(qubit_labels: Vec<usize>, matrix: ComplexMatrix) -> Self {
        Self {
            qubit_labels,
            matrix,
        }
    }
}

fn check_distinct(labels: &[usize]) -> Result<()> {
    for (i, a) in labels.iter().enumerate() {
        if labels[i + 1..].contains(a) {
            return Err(Error::CoincidentQubits(*a));
        }
    }
    Ok(())
}

/// Anything a reduced density matrix can be taken from.
pub trait Reduce {
    /// Original labels of the qubits this object describes, in local bit order.
    fn labels(&self) -> Vec<usize>;

    /// Reduced density matrix over `keep` (original labels), ascending.
    fn reduce(&self, keep: &[usize]) -> Result<DensityMatrix>;
}

/// Sorts `keep` and maps it to local bit positions.
fn local_positions(labels: &[usize], keep: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    if keep.is_empty() {
        return Err(Error::EmptyKeep);
    }
    check_distinct(keep)?;
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    let positions = sorted
        .iter()
        .map(|q| {
            labels
                .iter()
                .position(|l| l == q)
                .ok_or(Error::QubitOutOfRange {
                    index: *q,
                    n_qubits: labels.len(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((sorted, positions))
}

/// Offsets for the kept register and for its complement.
fn scatter_offsets(n: usize, kept: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let rest: Vec<usize> = (0..n).filter(|q| !kept.contains(q)).collect();
    let spread = |bits: &[usize]| -> Vec<usize> {
        (0..1usize << bits.len())
            .map(|x| {
                bits.iter()
                    .enumerate()
                    .fold(0, |acc, (j, &q)| acc | (((x >> j) & 1) << q))
            })
            .collect()
    };
    (spread(kept), spread(&rest))
}

impl Reduce for PureState {
    fn labels(&self) -> Vec<usize> {
        (0..self.n_qubits).collect()
    }

    fn reduce(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let (sorted, positions) = local_positions(&self.labels(), keep)?;
        let (kept, env) = scatter_offsets(self.n_qubits, &positions);
        let d = kept.len();
        let psi = &self.amplitudes;
        let mut m = ComplexMatrix::zeros(d, d);
        for r in 0..d {
            for c in r..d {
                let mut acc = ZERO;
                for &e in &env {
                    acc += psi[kept[r] | e] * psi[kept[c] | e].conj();
                }
                m[(r, c)] = acc;
                m[(c, r)] = acc.conj();
            }
            m[(r, r)] = Complex64::new(m[(r, r)].re, 0.0);
        }
        Ok(DensityMatrix::from_parts_unchecked(sorted, m))
    }
}

impl Reduce for DensityMatrix {
    fn labels(&self) -> Vec<usize> {
        self.qubit_labels.clone()
    }

    fn reduce(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let (sorted, positions) = local_positions(&self.qubit_labels, keep)?;
        let (kept, env) = scatter_offsets(self.n_qubits(), &positions);
        let d = kept.len();
        let rho = &self.matrix;
        let mut m = ComplexMatrix::zeros(d, d);
        for r in 0..d {
            for c in r..d {
                let mut acc = ZERO;
                for &e in &env {
                    acc += rho[(kept[r] | e, kept[c] | e)];
                }
                m[(r, c)] = acc;
                m[(c, r)] = acc.conj();
            }
            m[(r, r)] = Complex64::new(m[(r, r)].re, 0.0);
        }
        Ok(DensityMatrix::from_parts_unchecked(sorted, m))
    }
}

/// Reduced density matrix of `state` over the qubits in `keep`.
pub fn partial_trace<S: Reduce + ?Sized>(state: &S, keep: &[usize]) -> Result<DensityMatrix> {
    state.reduce(keep)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateFamily {
    Ghz,
    W,
    Product,
    Bell,
}

impl StateFamily {
    pub const ALL: [StateFamily; 4] = [
        StateFamily::Ghz,
        StateFamily::W,
        StateFamily::Product,
        StateFamily::Bell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StateFamily::Ghz => "GHZ",
            StateFamily::W => "W",
            StateFamily::Product => "product",
            StateFamily::Bell => "Bell",
        }
    }
}

impl fmt::Display for StateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StateFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ghz" => Ok(StateFamily::Ghz),
            "w" => Ok(StateFamily::W),
            "product" => Ok(StateFamily::Product),
            "bell" => Ok(StateFamily::Bell),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// GHZ, W, all-zeros product, or the Bell pair `(|00> + |11>)/√2`.
pub fn state_family(family: StateFamily, n_qubits: usize) -> Result<PureState> {
    if n_qubits < 2 {
        return Err(Error::QubitCount {
            got: n_qubits,
            reason: "state families need at least 2 qubits",
        });
    }
    if n_qubits > MAX_QUBITS {
        return Err(Error::QubitCount {
            got: n_qubits,
            reason: "must be between 1 and 16",
        });
    }
    let dim = 1usize << n_qubits;
    let mut amps = vec![ZERO; dim];
    match family {
        StateFamily::Ghz => {
            let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            amps[0] = h;
            amps[dim - 1] = h;
        }
        StateFamily::W => {
            let a = Complex64::new(1.0 / (n_qubits as f64).sqrt(), 0.0);
            for k in 0..n_qubits {
                amps[1 << k] = a;
            }
        }
        StateFamily::Product => amps[0] = ONE,
        StateFamily::Bell => {
            if n_qubits != 2 {
                return Err(Error::QubitCount {
                    got: n_qubits,
                    reason: "the Bell pair has exactly 2 qubits",
                });
            }
            let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            amps[0] = h;
            amps[3] = h;
        }
    }
    PureState::with_tolerance(n_qubits, amps, 1e-12)
}
