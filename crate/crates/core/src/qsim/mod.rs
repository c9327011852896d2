//! Dense statevector and density-operator simulator.
//!
//! Statevector convention: qubit 0 is the least significant bit of the
//! amplitude index, so `|q2 q1 q0>` maps to index `q2*4 + q1*2 + q0`.
//! Circuit runs sample noise per trajectory; density operators are reserved
//! for the element-wise channel machinery.

mod circuit;
mod density;
mod expm;
mod gate;
mod noise;
mod state;

pub use circuit::{run_postselected, run_pure, run_trajectory, Circuit, CircuitOp, Trajectory};
pub use density::{partial_trace, trace_distance, DensityOp};
pub use expm::{expm_hermitian, expm_hermitian_real, hermitian_defect, hermitian_part, is_hermitian};
pub use gate::{controlled, gates, kron, state_prep_unitary, GateOp};
pub use noise::{apply_gate_noise, NoiseScope, NoiseSpec};
pub use state::{fidelity, Measured, QuantumState};

/// Hard cap on simulator width; dense amplitudes above this are out of scope.
pub const MAX_QUBITS: usize = 14;
