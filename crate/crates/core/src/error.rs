//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction and solver routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A requested dimension exceeds the configured cap.
    #[error("capacity: {0}")]
    Capacity(String),

    /// An argument violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A chart is singular or a geometric construction degenerates.
    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    /// A quadrature grid does not belong to the immersion it is used with.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// Unsupported (ambient space, Killing constant) combination.
    #[error("unsupported pair: {0}")]
    Unsupported(String),

    /// A spectrum's completeness window is too small for the requested check.
    #[error("window insufficient: {0}")]
    WindowInsufficient(String),

    /// Bad run configuration (CLI / config file).
    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
