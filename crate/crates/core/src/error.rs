use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not Hermitian (max |M - M^dagger| = {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not positive semidefinite (eigenvalue {0:e})")]
    NotPsd(f64),

    #[error("Jacobi sweep did not converge after {sweeps} sweeps (off-diagonal norm {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitOutOfRange { index: usize, n_qubits: usize },

    #[error("empty qubit set")]
    EmptyKeep,

    #[error("qubit indices must be distinct (got {0} twice)")]
    CoincidentQubits(usize),

    #[error("norm {0} outside tolerance")]
    NotNormalized(String),

    #[error("trace {0} outside tolerance")]
    BadTrace(f64),

    #[error("invalid qubit count {got}: {reason}")]
    QubitCount { got: usize, reason: &'static str },

    #[error("unknown state family '{0}'")]
    UnknownFamily(String),

    #[error("decomposition size {size} is smaller than the rank {rank}")]
    DecompositionTooSmall { size: usize, rank: usize },

    #[error("{what} = {value} out of range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },

    #[error("falsified: {0}")]
    Falsified(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("malformed state file: {0}")]
    StateFile(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
