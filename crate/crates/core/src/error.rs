use thiserror::Error;

/// Errors raised by constructors and operations with violated preconditions.
///
/// Verification failures are not errors: they are reported through
/// [`crate::verification::VerificationReport`].
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max |m - m^dagger| entry {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("invalid dimension {dim}: {reason}")]
    InvalidDimension { dim: usize, reason: &'static str },

    #[error("invalid pair index: {0}")]
    InvalidPair(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("not a density state: {0}")]
    InvalidState(String),

    #[error("parameter p = {p} outside the CPTP range [{p_min}, {p_max}] for {family}{detail}")]
    ParameterOutOfRange {
        family: &'static str,
        p: f64,
        p_min: f64,
        p_max: f64,
        detail: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not a channel: {0}")]
    NotAChannel(String),

    #[error("no inequivalence certificate: {0}")]
    NoCertificate(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("invalid JSON at `{path}`: {message}")]
    Schema { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
