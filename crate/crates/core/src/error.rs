//! Error type shared across the library.

use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid weight parameters (α ≤ −1, β ≤ −1, bad margin, empty coefficients).
    #[error("parameter error: {0}")]
    Parameter(String),
    /// h fails the analyticity/positivity certification.
    #[error("analyticity error: {0}")]
    Analyticity(String),
    /// Argument outside the operation's real domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Complex argument on a branch cut or outside the cut plane.
    #[error("branch error: {0}")]
    Branch(String),
    /// A function produced a non-finite value where a finite one is required.
    #[error("evaluation error: {0}")]
    Evaluation(String),
    /// Iterative numerical procedure failed (eigensolver, Newton, positivity loss).
    #[error("numerical error: {0}")]
    Numerical(String),
    /// Unsupported Bessel order (integer order for K/Y-based paths).
    #[error("unsupported order: {0}")]
    UnsupportedOrder(String),
}

pub type Result<T> = std::result::Result<T, Error>;
