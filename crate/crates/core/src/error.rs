use thiserror::Error;

/// Errors raised by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported dimension {0}; only 2 and 4 are supported")]
    UnsupportedDimension(usize),
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("matrix is not hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("matrix is not idempotent (deviation {0:e})")]
    NotIdempotent(f64),
    #[error("trace has an imaginary residue of {0:e}; input is not hermitian")]
    ImaginaryTrace(f64),
    #[error("Bloch vector norm {norm} lies outside the ball of radius 1/2")]
    OutsideBlochBall { norm: f64 },
    #[error("axis is not a unit vector (norm {0})")]
    NotUnit(f64),
    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),
    #[error("invalid Bloch matrix: {0}")]
    InvalidBlochMatrix(String),
    #[error("pure-state amplitudes are not normalized (squared norm {0})")]
    NotNormalized(f64),
    #[error("state violates the qutrit condition: {0}")]
    NotQutrit(String),
    #[error("functional and state belong to different state universes")]
    UniverseMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is singular")]
    Singular,
    #[error("Jacobi sweeps did not converge")]
    NoConvergence,
}

pub type Result<T> = std::result::Result<T, Error>;
