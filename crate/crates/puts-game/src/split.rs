//! Finite-support signals.
//!
//! A [`SignalSplit`] describes one disclosure by the information designer:
//! a finite set of posterior beliefs with probabilities. Feasibility is the
//! martingale property — the probability-weighted average of the posteriors
//! must equal the prior exactly (within [`MARTINGALE_TOL`] per coordinate).

use serde::{Deserialize, Serialize};

use crate::belief::Belief;
use crate::error::GameError;

/// Per-coordinate tolerance for the martingale (Bayes-plausibility) check.
pub const MARTINGALE_TOL: f64 = 1e-12;

/// What kind of policy decision produced a split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitLabel {
    /// No disclosure: a single atom at the prior.
    Silence,
    /// A small two-sided correction when the aggregate has drifted from
    /// the target.
    Injection,
    /// An escape signal posted from inside the lower-dominance region.
    Jump,
}

impl std::fmt::Display for SplitLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SplitLabel::Silence => write!(f, "silence"),
            SplitLabel::Injection => write!(f, "injection"),
            SplitLabel::Jump => write!(f, "jump"),
        }
    }
}

/// One atom of a signal: a posterior belief with its probability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitAtom {
    pub probability: f64,
    pub posterior: Belief,
}

/// A finite-support signal satisfying the martingale property.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignalSplit {
    label: SplitLabel,
    atoms: Vec<SplitAtom>,
}

impl SignalSplit {
    /// Construct a split, validating probabilities and the martingale
    /// property against `prior`.
    pub fn new(
        label: SplitLabel,
        atoms: Vec<SplitAtom>,
        prior: &Belief,
    ) -> Result<Self, GameError> {
        if atoms.is_empty() {
            return Err(GameError::domain("signal needs at least one atom".to_string()));
        }
        let mut p_sum = 0.0;
        for (i, atom) in atoms.iter().enumerate() {
            if !(atom.probability.is_finite() && atom.probability >= 0.0) {
                return Err(GameError::domain(format!(
                    "atom {i} has probability {}, must be finite and non-negative",
                    atom.probability
                )));
            }
            if atom.posterior.n_states() != prior.n_states() {
                return Err(GameError::domain(format!(
                    "atom {i} posterior has {} states, prior has {}",
                    atom.posterior.n_states(),
                    prior.n_states()
                )));
            }
            p_sum += atom.probability;
        }
        if (p_sum - 1.0).abs() > MARTINGALE_TOL {
            return Err(GameError::invariant(format!(
                "signal probabilities sum to {p_sum}, expected 1 within {MARTINGALE_TOL}"
            )));
        }
        for coord in 0..prior.n_states() {
            let mean: f64 = atoms
                .iter()
                .map(|a| a.probability * a.posterior.weight(coord))
                .sum();
            if (mean - prior.weight(coord)).abs() > MARTINGALE_TOL {
                return Err(GameError::invariant(format!(
                    "martingale violation on coordinate {coord}: mean posterior {mean} vs prior {}",
                    prior.weight(coord)
                )));
            }
        }
        Ok(SignalSplit { label, atoms })
    }

    /// The trivial no-disclosure signal.
    pub fn silence(prior: &Belief) -> SignalSplit {
        SignalSplit {
            label: SplitLabel::Silence,
            atoms: vec![SplitAtom {
                probability: 1.0,
                posterior: prior.clone(),
            }],
        }
    }

    /// Decision kind that produced this split.
    pub fn label(&self) -> SplitLabel {
        self.label
    }

    /// The atoms.
    pub fn atoms(&self) -> &[SplitAtom] {
        &self.atoms
    }

    /// Whether this split discloses nothing (single atom).
    pub fn is_silent(&self) -> bool {
        self.atoms.len() == 1
    }

    /// Worst-case martingale residual against a prior (for diagnostics and
    /// tests): `max_coord |Σ_k p_k posterior_k - prior|`.
    pub fn martingale_residual(&self, prior: &Belief) -> f64 {
        let mut worst: f64 = 0.0;
        for coord in 0..prior.n_states() {
            let mean: f64 = self
                .atoms
                .iter()
                .map(|a| a.probability * a.posterior.weight(coord))
                .sum();
            worst = worst.max((mean - prior.weight(coord)).abs());
        }
        worst
    }

    /// Sample an atom index given a uniform draw `u ∈ [0, 1)`.
    pub fn sample_index(&self, u: f64) -> usize {
        debug_assert!((0.0..=1.0).contains(&u));
        let mut acc = 0.0;
        for (i, atom) in self.atoms.iter().enumerate() {
            acc += atom.probability;
            if u < acc {
                return i;
            }
        }
        self.atoms.len() - 1
    }
}

impl std::fmt::Display for SignalSplit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}[", self.label)?;
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{:.6} → {}", a.probability, a.posterior)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn silence_is_single_atom_at_prior() {
        let prior = Belief::binary(0.4).unwrap();
        let s = SignalSplit::silence(&prior);
        assert!(s.is_silent());
        assert_eq!(s.label(), SplitLabel::Silence);
        assert_eq!(s.atoms()[0].posterior, prior);
        assert_eq!(s.martingale_residual(&prior), 0.0);
    }

    #[test]
    fn martingale_property_enforced() {
        let prior = Belief::binary(0.5).unwrap();
        let good = SignalSplit::new(
            SplitLabel::Injection,
            vec![
                SplitAtom {
                    probability: 0.5,
                    posterior: Belief::binary(0.6).unwrap(),
                },
                SplitAtom {
                    probability: 0.5,
                    posterior: Belief::binary(0.4).unwrap(),
                },
            ],
            &prior,
        );
        assert!(good.is_ok());

        let bad = SignalSplit::new(
            SplitLabel::Injection,
            vec![
                SplitAtom {
                    probability: 0.5,
                    posterior: Belief::binary(0.7).unwrap(),
                },
                SplitAtom {
                    probability: 0.5,
                    posterior: Belief::binary(0.4).unwrap(),
                },
            ],
            &prior,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn probabilities_must_sum_to_one() {
        let prior = Belief::binary(0.5).unwrap();
        let bad = SignalSplit::new(
            SplitLabel::Jump,
            vec![SplitAtom {
                probability: 0.9,
                posterior: prior.clone(),
            }],
            &prior,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn sampling_covers_atoms() {
        let prior = Belief::binary(0.5).unwrap();
        let s = SignalSplit::new(
            SplitLabel::Injection,
            vec![
                SplitAtom {
                    probability: 0.25,
                    posterior: Belief::binary(0.8).unwrap(),
                },
                SplitAtom {
                    probability: 0.75,
                    posterior: Belief::binary(0.4).unwrap(),
                },
            ],
            &prior,
        )
        .unwrap();
        assert_eq!(s.sample_index(0.1), 0);
        assert_eq!(s.sample_index(0.25), 1);
        assert_eq!(s.sample_index(0.9999), 1);
    }
}
