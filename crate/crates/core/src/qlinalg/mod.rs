//! Dense complex linear algebra and quantum-state construction.

pub mod decomposition;
pub mod eigen;
pub mod matrix;
pub mod random;
pub mod state;

pub use decomposition::{
    decomposition_from_unitary, rank, sample_decomposition, sample_decomposition_with,
    Decomposition,
};
pub use eigen::{hermitian_eig, psd_sqrt, SpectralDecomposition};
pub use matrix::{sigma_x, sigma_y, sigma_z, ComplexMatrix};
pub use random::{
    complex_gaussian, haar_random_pure, haar_random_pure_with, random_mixed_two_qubit,
    random_unitary, stream_rng,
};
pub use state::{
    partial_trace, state_family, DensityMatrix, PureState, Reduce, StateFamily, StateFile,
};
