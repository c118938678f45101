//! Error types for dominance-geometry operations.

use thiserror::Error;

/// Errors from threshold solves, constants computation, and escape
/// operations.
#[derive(Debug, Error)]
pub enum DominanceError {
    /// An argument was outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A precondition on the belief's location failed (e.g. the belief was
    /// inside a region the operation requires it to be outside of).
    #[error("precondition violation: {0}")]
    Precondition(String),

    /// A structural invariant failed (non-monotone values, inverted
    /// thresholds, …).
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// A requested margin or parameter is infeasible for the given belief.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Propagated numerical failure from the core layer.
    #[error(transparent)]
    Numerics(#[from] puts_game::GameError),
}

impl DominanceError {
    pub fn domain(msg: impl Into<String>) -> Self {
        DominanceError::Domain(msg.into())
    }
    pub fn precondition(msg: impl Into<String>) -> Self {
        DominanceError::Precondition(msg.into())
    }
    pub fn invariant(msg: impl Into<String>) -> Self {
        DominanceError::Invariant(msg.into())
    }
    pub fn parameter(msg: impl Into<String>) -> Self {
        DominanceError::Parameter(msg.into())
    }
}
