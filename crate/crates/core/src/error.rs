use thiserror::Error;

/// Errors raised by the algebraic routines.
///
/// Verification failures are never errors: they are returned inside reports.
/// Errors signal invalid input, unmet preconditions or missing data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("exponent {k} is not coprime to conductor {n}")]
    NotCoprime { k: i64, n: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed data: {0}")]
    Malformed(String),

    #[error("insufficient data: S-matrix entry ({0}, {1}) is unknown")]
    UnknownEntry(String, String),

    #[error("insufficient data: {0}")]
    Insufficient(String),

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("degenerate bilinear form: radical contains {0}")]
    Degenerate(String),

    #[error("unsupported size: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
