use thiserror::Error;

/// Errors raised by the pivotlab library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input that violates an operation's preconditions.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The two endpoints of a pivot walk coincide.
    #[error("endpoints coincide: {0}")]
    EqualEndpoints(String),

    /// A continued fraction ran out of coefficients.
    #[error("continued fraction has only {available} coefficients, {requested} requested")]
    InsufficientCoefficients { available: usize, requested: usize },

    /// A configured resource limit (monomial count, precision, set size) was hit.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Every triple evaluated to +2 or -2, so no gap is defined.
    #[error("degenerate gap: {0}")]
    DegenerateGap(String),

    /// A numerical certificate could not be established.
    #[error("certification failed: {0}")]
    Certification(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
