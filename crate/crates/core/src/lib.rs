//! Hybrid classical-quantum Gaussian-process training, simulated at desk scale.
//!
//! The crate bundles five subsystems:
//!
//! - [`nngp`] — layerwise ReLU covariance recursion for infinite-width
//!   networks, density-operator encoding, and polynomial fits of the
//!   angular kernel factor.
//! - [`gp`] — the exact classical Gaussian-process predictor used as the
//!   ground-truth oracle for everything quantum.
//! - [`qsim`] — a dense statevector / density-operator simulator with the
//!   two parametric noise models (per-gate bit flips, readout errors).
//! - [`qls`] — quantum linear-system inversion: phase estimation, the
//!   general eigenvalue-inversion circuit, a shallow specialized circuit
//!   for a pinned 2x2 system, repetition statistics, and the swap test.
//! - [`elementwise`] — modified-SWAP generators and Trotterized channel
//!   steps that exponentiate Hadamard / diagonal-outer products of density
//!   matrices, with exact-exponential oracles.
//!
//! [`harness`] wires these into reproducible experiments that emit CSV
//! tables and SVG plots.
//!
//! Conventions: statevector qubit 0 is the least significant bit of the
//! amplitude index. Subsystem lists for density-operator partial traces are
//! given in Kronecker order (leftmost factor is most significant).

pub mod elementwise;
pub mod error;
pub mod gp;
pub mod harness;
pub mod nngp;
pub mod qls;
pub mod qsim;

pub use error::{Error, Result};
