//! Error type shared by every module.

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or generator was given parameters outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An exhaustive scan was asked to run above its built-in size guard.
    #[error("{operation}: input of size {actual} exceeds the limit of {limit}")]
    SizeLimit {
        operation: &'static str,
        limit: usize,
        actual: usize,
    },

    /// The input does not satisfy the hypotheses of the requested result.
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    /// Malformed external input (JSON documents, generator specs).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two routes that must agree did not; the message carries all results.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::SizeLimit { .. } => "size_limit",
            Error::HypothesisViolation(_) => "hypothesis_violation",
            Error::InvalidInput(_) => "invalid_input",
            Error::Inconsistency(_) => "inconsistency",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Effective size guard for edge-bounded scans. The environment variable
/// `GRAPHVAR_MAX_EDGES` may lower (never raise) the built-in limit.
pub(crate) fn edge_guard(builtin: usize) -> usize {
    match std::env::var("GRAPHVAR_MAX_EDGES") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(v) => builtin.min(v),
            Err(_) => builtin,
        },
        Err(_) => builtin,
    }
}
