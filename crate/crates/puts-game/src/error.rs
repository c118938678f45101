//! Error types for the core model layer.

use thiserror::Error;

/// Errors produced by game-specification, belief, path, quadrature, and
/// functional operations.
#[derive(Debug, Error)]
pub enum GameError {
    /// A constructor or operation received an argument outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A structural invariant of a specification failed validation.
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// An iterative numerical routine failed to reach its tolerance.
    #[error("numerical non-convergence: {0}")]
    NonConvergence(String),
}

impl GameError {
    /// Convenience constructor for domain errors.
    pub fn domain(msg: impl Into<String>) -> Self {
        GameError::Domain(msg.into())
    }

    /// Convenience constructor for invariant violations.
    pub fn invariant(msg: impl Into<String>) -> Self {
        GameError::Invariant(msg.into())
    }

    /// Convenience constructor for non-convergence reports.
    pub fn non_convergence(msg: impl Into<String>) -> Self {
        GameError::NonConvergence(msg.into())
    }
}
