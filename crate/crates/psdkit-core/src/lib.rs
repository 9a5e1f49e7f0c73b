//! Core numerics for positive semidefinite matrices and their Schur-parameter
//! lattice representation.
//!
//! The crate is organised around one carrier type, [`ComplexMatrix`], and a
//! set of modules that each expose a self-contained piece of the toolkit:
//!
//! * [`matrix`] — dense complex matrices plus the index-structure operations
//!   (column stacking, partial trace, partial transpose).
//! * [`linalg`] — Hermitian eigendecomposition, semidefinite Cholesky,
//!   characteristic-polynomial coefficients, matrix square roots and
//!   pseudoinverses.
//! * [`positivity`] — six independent positivity oracles and a consensus
//!   checker.
//! * [`schur`] — extraction and reconstruction of the Schur parameters
//!   (diagonal square roots plus a family of contractions) of a positive
//!   matrix, with the determinant and rank-one corollaries.
//! * [`bloch`] — generalized Gell-Mann bases, Bloch coordinates, the
//!   symmetric structure tensor and the pure-state criteria.
//! * [`channel`] — Choi matrices, Kraus representations and the completely
//!   positive / trace-preserving / unital verdicts.
//! * [`toeplitz`] — (block-)Toeplitz constructors, the reversal-permutation
//!   transpose identities and positive-partial-transpose verdicts.
//! * [`relax`] — dissipator assembly for N-level open systems and the
//!   complete-positivity constraints on four-level relaxation rates.
//! * [`sample`] — seeded random fixtures shared by the property tests and
//!   the self-test suite.
//!
//! The crate is `no_std` (with `alloc`); all operations are pure functions of
//! their inputs and safe to call concurrently. Matrices up to dimension 64
//! are the design envelope.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bloch;
pub mod channel;
mod error;
pub mod linalg;
pub mod matrix;
pub mod positivity;
pub mod relax;
pub mod sample;
pub mod schur;
pub mod toeplitz;

pub use error::Error;
pub use matrix::{ComplexMatrix, Complex64, Tolerance};

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
