//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by kernel construction, the simulator, the inversion
/// circuits, the channel machinery, and the harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty-dataset: dataset must contain at least one point with at least one feature")]
    EmptyDataset,

    #[error("non-finite: {0}")]
    NonFinite(String),

    #[error("degenerate-diagonal: kernel diagonal entry {index} is {value}, must be strictly positive")]
    DegenerateDiagonal { index: usize, value: f64 },

    #[error("paper-literal-domain: arcsin argument {0} outside [-1, 1] in the paper-literal recursion")]
    PaperLiteralDomain(f64),

    #[error("zero-trace: kernel trace {0} is not positive, cannot normalize to a density operator")]
    ZeroTrace(f64),

    #[error("not-positive-definite: symmetric factorization failed")]
    NotPositiveDefinite,

    #[error("shape-mismatch: {0}")]
    ShapeMismatch(String),

    #[error("variance-negative: predictive variance {0} below tolerance")]
    VarianceNegative(f64),

    #[error("not-unitary: gate '{0}' deviates from unitarity beyond 1e-10")]
    NotUnitary(String),

    #[error("not-hermitian: matrix deviates from Hermitian symmetry by {0}")]
    NotHermitian(f64),

    #[error("not-normalized: state norm {0} deviates from 1 beyond 1e-10")]
    NotNormalized(f64),

    #[error("bad-partition: subsystem dimensions {dims:?} do not factor a dimension-{dim} operator")]
    BadPartition { dims: Vec<usize>, dim: usize },

    #[error("invalid-density: {0}")]
    InvalidDensity(String),

    #[error("bad-qubit: qubit index {index} out of range for {num_qubits} qubits")]
    BadQubit { index: usize, num_qubits: usize },

    #[error("phase-wraparound: eigenvalue {lambda} times t0 {t0} reaches 2*pi, clock register would alias")]
    PhaseWraparound { lambda: f64, t0: f64 },

    #[error("rotation-overflow: rotation constant {c} exceeds the smallest representable eigenvalue {lambda_min}")]
    RotationOverflow { c: f64, lambda_min: f64 },

    #[error("budget-exceeded: {steps} Trotter steps exceed the {cap} step cap")]
    BudgetExceeded { steps: u64, cap: u64 },

    #[error("empty-pattern: product pattern must contain at least one operation")]
    EmptyPattern,

    #[error("dimension-cap: total operator dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("ill-conditioned-for-clock-bits: condition number {kappa:.2} exceeds {max:.0}")]
    IllConditioned { kappa: f64, max: f64 },

    #[error("empty-input: {0}")]
    EmptyInput(String),

    #[error("schema-mismatch: {0}")]
    SchemaMismatch(String),

    #[error("invalid-config: {0}")]
    InvalidConfig(String),

    #[error("parse: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
