//! Beliefs over a finite state space.
//!
//! A [`Belief`] is a probability vector over the game's states. The binary
//! case (two states, dominant state at index 1) is the workhorse throughout
//! the workspace and gets exact-arithmetic constructors and accessors; the
//! general case supports any finite number of states.

use serde::{Deserialize, Serialize};

use crate::error::GameError;

/// Tolerance for the "weights sum to one" invariant.
pub const SUM_TOL: f64 = 1e-12;

/// A probability distribution over the states of a [`crate::GameSpec`].
///
/// Invariants (checked on construction):
/// - every weight is finite and non-negative,
/// - the weights sum to 1 within [`SUM_TOL`],
/// - there are at least two states.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Belief {
    weights: Vec<f64>,
}

impl Belief {
    /// Construct a belief from raw weights, validating the simplex
    /// invariants.
    pub fn new(weights: Vec<f64>) -> Result<Self, GameError> {
        if weights.len() < 2 {
            return Err(GameError::domain(format!(
                "belief needs at least 2 states, got {}",
                weights.len()
            )));
        }
        let mut sum = 0.0;
        for (i, &w) in weights.iter().enumerate() {
            if !w.is_finite() || w < 0.0 {
                return Err(GameError::domain(format!(
                    "belief weight {i} is {w}; weights must be finite and non-negative"
                )));
            }
            sum += w;
        }
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(GameError::domain(format!(
                "belief weights sum to {sum}, expected 1 within {SUM_TOL}"
            )));
        }
        Ok(Belief { weights })
    }

    /// Binary belief `[1 - mu, mu]`: `mu` is the weight on the dominant
    /// state, which sits at index 1 by convention.
    pub fn binary(mu: f64) -> Result<Self, GameError> {
        if !(0.0..=1.0).contains(&mu) || !mu.is_finite() {
            return Err(GameError::domain(format!(
                "binary belief weight must lie in [0, 1], got {mu}"
            )));
        }
        Ok(Belief {
            weights: vec![1.0 - mu, mu],
        })
    }

    /// Point mass on state `idx` in an `n`-state space.
    pub fn point_mass(n: usize, idx: usize) -> Result<Self, GameError> {
        if n < 2 || idx >= n {
            return Err(GameError::domain(format!(
                "point mass needs idx < n and n >= 2, got n={n}, idx={idx}"
            )));
        }
        let mut weights = vec![0.0; n];
        weights[idx] = 1.0;
        Ok(Belief { weights })
    }

    /// Number of states.
    pub fn n_states(&self) -> usize {
        self.weights.len()
    }

    /// Weight on state `i`.
    pub fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }

    /// All weights as a slice.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Whether this is a two-state belief.
    pub fn is_binary(&self) -> bool {
        self.weights.len() == 2
    }

    /// Expectation of a per-state function under this belief.
    pub fn expectation(&self, f: impl Fn(usize) -> f64) -> f64 {
        self.weights
            .iter()
            .enumerate()
            .map(|(i, &w)| w * f(i))
            .sum()
    }

    /// Inner product with a per-state value vector.
    pub fn dot(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.weights.len());
        self.weights
            .iter()
            .zip(values.iter())
            .map(|(w, v)| w * v)
            .sum()
    }

    /// Largest absolute coordinate difference to another belief.
    pub fn linf_distance(&self, other: &Belief) -> f64 {
        self.weights
            .iter()
            .zip(other.weights.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl std::fmt::Display for Belief {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w:.6}")?;
        }
        write!(f, ")")
    }
}
