//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error enum. Numeric routines return these instead of panicking so
/// the CLI can map them onto exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// A family definition is unusable (bad builtin parameters, exhausted
    /// coefficient list, wrong convention for the requested operation, ...).
    #[error("invalid family: {0}")]
    InvalidFamily(String),

    /// λ must be positive wherever the recurrence actually consumes it.
    #[error("invalid family: lambda at index {index} is {value}, must be > 0")]
    NonPositiveLambda { index: usize, value: f64 },

    /// Generation degree above the supported cap.
    #[error("degree {requested} exceeds the cap of {cap}")]
    DegreeCapExceeded { requested: usize, cap: usize },

    /// Perturbation level incompatible with the requested sequence length or
    /// the family's indexing convention.
    #[error("perturbation level {k} out of range: {reason}")]
    LevelOutOfRange { k: usize, reason: String },

    /// A malformed perturbation specification (duplicate levels, ν ≤ 0, ...).
    #[error("invalid perturbation: {0}")]
    InvalidPerturbation(String),

    /// The minimal-parameter iteration left (0, 1): not a positive chain sequence.
    #[error("not a positive chain sequence: parameter at index {index} is {value}")]
    NotAChainSequence { index: usize, value: f64 },

    /// Scaling a chain entry destroyed the chain-sequence property.
    #[error("dilation produces an invalid chain sequence at index {index} (parameter {value})")]
    InvalidDilation { index: usize, value: f64 },

    /// A polynomial identity that must hold exactly failed beyond tolerance;
    /// signals a bug or an invalid family, never a rounding artifact.
    #[error("identity violation in {what}: residual {residual:e}")]
    IdentityViolation { what: String, residual: f64 },

    /// An iterative solver did not reach its tolerance.
    #[error("convergence failure in {what}: residual {residual:e}")]
    ConvergenceFailure { what: String, residual: f64 },

    /// Electrostatic energy is undefined for coincident points.
    #[error("coincident points at value {0}: energy is infinite")]
    CoincidentPoints(f64),

    /// Szegő recurrence needs strictly sub-unimodular Verblunsky coefficients.
    #[error("invalid Verblunsky coefficient at index {index}: |alpha| = {modulus}")]
    InvalidVerblunsky { index: usize, modulus: f64 },

    /// Exact-division / interpolation consistency checks.
    #[error("inconsistent input for {what}: residual {residual:e}")]
    InconsistentInput { what: String, residual: f64 },

    /// Every evaluation node was skipped (degenerate matrix on the whole grid).
    #[error("degenerate evaluation grid: no usable nodes")]
    DegenerateGrid,

    /// Pencil characteristic polynomial above the cofactor-expansion size cap.
    #[error("pencil size {requested} exceeds the cofactor-expansion cap of {cap}")]
    SizeCapExceeded { requested: usize, cap: usize },

    /// Zero classification found a violation of a guaranteed invariant
    /// (e.g. non-real zeros for an unperturbed special family).
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// Configuration parsing.
    #[error("config error: {0}")]
    Config(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Config(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
