//! Multi-qubit entanglement measures and numerical verification of the
//! monogamy relations between tangle, tangle of assistance and linear
//! entropy for pure states.
//!
//! * [`qlinalg`]: complex matrices, partial traces, Jacobi eigensolver,
//!   Haar sampling, pure-state decompositions.
//! * [`measures`]: linear entropy, linear mutual entropy, concurrence,
//!   concurrence of assistance and the tangles.
//! * [`schmidt`]: the Schmidt cut of qubit 0 against the rest and the
//!   discriminant computed three independent ways.
//! * [`inequalities`]: one checker per monogamy relation.
//! * [`harness`]: fuzzing campaigns, counterexample hunting, family tables.

pub mod error;
pub mod harness;
pub mod inequalities;
pub mod measures;
pub mod qlinalg;
pub mod schmidt;

pub use error::{Error, Result};
