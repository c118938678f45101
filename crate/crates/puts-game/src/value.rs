//! Discounted commitment values.
//!
//! The object that defines dominance regions is the expected discounted
//! flow-payoff difference of holding action 1 rather than action 0 until
//! the next revision opportunity, when the rest of the population follows
//! a reference aggregate path `A_s`:
//!
//! `V(μ, A) = Σ_θ μ_θ ∫_0^∞ e^{-(r + λ) s} Δu(A_s, θ) ds`.
//!
//! The effective discount `κ = r + λ` combines impatience with the arrival
//! of the next revision. The *upper-path* value (reference path `Ā_s`
//! starting at `A` with everyone switching up) is the optimistic benchmark:
//! its sign at belief `μ` defines the lower-dominance region. The
//! *lower-path* value plays the symmetric pessimistic role.
//!
//! Integrals are truncated at a horizon where the analytic tail bound drops
//! below [`TAIL_TOL`], and the constant-limit tail is added in closed form.

use crate::belief::Belief;
use crate::error::GameError;
use crate::paths::{lower_play_path, upper_play_path};
use crate::quad::integrate;
use crate::spec::GameSpec;

/// Absolute tolerance allotted to the truncated tail of discounted
/// integrals.
pub const TAIL_TOL: f64 = 1e-12;

/// Absolute tolerance for the quadrature on the truncated window.
pub const QUAD_TOL: f64 = 1e-10;

/// Truncation horizon: beyond `T`, `|∫_T^∞ e^{-κ s} (Δu(A_s,θ) - Δu(A_∞,θ)) ds|`
/// is below [`TAIL_TOL`], using `|Δu| ≤ flow_bound`.
fn truncation_horizon(kappa: f64, flow_bound: f64) -> f64 {
    // 2·flow_bound · e^{-κT} / κ ≤ TAIL_TOL.
    let bound = (2.0 * flow_bound).max(1e-6);
    ((bound / (kappa * TAIL_TOL)).ln() / kappa).max(1.0)
}

/// Per-state discounted value on the upper path:
/// `∫_0^∞ e^{-(r+λ) s} Δu(Ā_s, θ) ds` with `Ā` started at `a`.
pub fn state_value_upper(game: &GameSpec, state: usize, a: f64) -> Result<f64, GameError> {
    state_value(game, state, a, true)
}

/// Per-state discounted value on the lower path:
/// `∫_0^∞ e^{-(r+λ) s} Δu(A̲_s, θ) ds` with `A̲` started at `a`.
pub fn state_value_lower(game: &GameSpec, state: usize, a: f64) -> Result<f64, GameError> {
    state_value(game, state, a, false)
}

fn state_value(game: &GameSpec, state: usize, a: f64, upper: bool) -> Result<f64, GameError> {
    if !(0.0..=1.0).contains(&a) {
        return Err(GameError::domain(format!(
            "aggregate play must lie in [0, 1], got {a}"
        )));
    }
    if state >= game.n_states() {
        return Err(GameError::domain(format!(
            "state {state} out of range for {} states",
            game.n_states()
        )));
    }
    let lambda = game.switch_rate();
    let kappa = game.discount_rate() + lambda;
    let horizon = truncation_horizon(kappa, game.flow_bound());

    let path = |s: f64| -> f64 {
        if upper {
            upper_play_path(a, lambda, s).expect("validated path arguments")
        } else {
            lower_play_path(a, lambda, s).expect("validated path arguments")
        }
    };
    let q = integrate(
        |s| (-kappa * s).exp() * game.delta_u(path(s), state),
        0.0,
        horizon,
        QUAD_TOL,
    )?;
    // Beyond the horizon the path is within TAIL_TOL·κ/(2·flow_bound) of its
    // limit; integrate the limit payoff exactly.
    let a_limit = if upper { 1.0 } else { 0.0 };
    let tail = (-kappa * horizon).exp() / kappa * game.delta_u(a_limit, state);
    Ok(q.value + tail)
}

/// Expected discounted payoff difference of committing to action 1 over
/// action 0 at belief `μ` when the population follows the upper path from
/// aggregate play `a`:
///
/// `ΔV(μ, a) = Σ_θ μ_θ ∫_0^∞ e^{-(r+λ)s} Δu(Ā_s, θ) ds`.
pub fn discounted_delta_value(game: &GameSpec, belief: &Belief, a: f64) -> Result<f64, GameError> {
    if belief.n_states() != game.n_states() {
        return Err(GameError::domain(format!(
            "belief has {} states, game has {}",
            belief.n_states(),
            game.n_states()
        )));
    }
    let mut total = 0.0;
    for state in 0..game.n_states() {
        let w = belief.weight(state);
        if w == 0.0 {
            continue;
        }
        total += w * state_value_upper(game, state, a)?;
    }
    Ok(total)
}

/// Same expected commitment value but against the all-down reference path
/// (the pessimistic benchmark defining the upper-dominance threshold).
pub fn discounted_delta_value_lower(
    game: &GameSpec,
    belief: &Belief,
    a: f64,
) -> Result<f64, GameError> {
    if belief.n_states() != game.n_states() {
        return Err(GameError::domain(format!(
            "belief has {} states, game has {}",
            belief.n_states(),
            game.n_states()
        )));
    }
    let mut total = 0.0;
    for state in 0..game.n_states() {
        let w = belief.weight(state);
        if w == 0.0 {
            continue;
        }
        total += w * state_value_lower(game, state, a)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// For the canonical game the upper-path value has the closed form
    /// `ΔV(μ, A) = μ - (1 - A) / 3`:
    /// `∫ e^{-2s} (Ā_s + 2θ - 1) ds` with `Ā_s = 1 - (1-A)e^{-s}` gives
    /// `(1 + 2θ - 1)/2 - (1-A)/3 + (θ-term)`, i.e. `θ=1 ⇒ 1 - (1-A)/3`,
    /// `θ=0 ⇒ -(1-A)/3`, and mixing yields `μ - (1-A)/3`.
    fn canonical_closed_form(mu: f64, a: f64) -> f64 {
        mu - (1.0 - a) / 3.0
    }

    #[test]
    fn canonical_upper_values_match_closed_form() {
        let g = GameSpec::canonical();
        assert_abs_diff_eq!(state_value_upper(&g, 1, 0.0).unwrap(), 2.0 / 3.0, epsilon = 1e-10);
        assert_abs_diff_eq!(state_value_upper(&g, 0, 0.0).unwrap(), -1.0 / 3.0, epsilon = 1e-10);
        for k in 0..=10 {
            let a = k as f64 / 10.0;
            for m in 0..=10 {
                let mu = m as f64 / 10.0;
                let b = Belief::binary(mu).unwrap();
                assert_abs_diff_eq!(
                    discounted_delta_value(&g, &b, a).unwrap(),
                    canonical_closed_form(mu, a),
                    epsilon = 1e-9
                );
            }
        }
    }

    #[test]
    fn canonical_spot_values() {
        let g = GameSpec::canonical();
        // ΔV(1/2, 0) = 1/2 - 1/3 = 1/6.
        let b = Belief::binary(0.5).unwrap();
        assert_abs_diff_eq!(
            discounted_delta_value(&g, &b, 0.0).unwrap(),
            1.0 / 6.0,
            epsilon = 1e-10
        );
        // ΔV(1/3, 0) = 0 (the threshold belief at A = 0).
        let b = Belief::binary(1.0 / 3.0).unwrap();
        assert_abs_diff_eq!(discounted_delta_value(&g, &b, 0.0).unwrap(), 0.0, epsilon = 1e-10);
        // ΔV(1, 1) = 1.
        let b = Belief::binary(1.0).unwrap();
        assert_abs_diff_eq!(discounted_delta_value(&g, &b, 1.0).unwrap(), 1.0, epsilon = 1e-10);
    }

    #[test]
    fn canonical_lower_values_match_closed_form() {
        // Lower path: ∫ e^{-2s}(A e^{-s} + 2θ - 1) ds = A/3 + (2θ-1)/2.
        let g = GameSpec::canonical();
        for k in 0..=4 {
            let a = k as f64 / 4.0;
            assert_abs_diff_eq!(
                state_value_lower(&g, 1, a).unwrap(),
                a / 3.0 + 0.5,
                epsilon = 1e-10
            );
            assert_abs_diff_eq!(
                state_value_lower(&g, 0, a).unwrap(),
                a / 3.0 - 0.5,
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn rejects_mismatched_belief_and_bad_play() {
        let g = GameSpec::canonical();
        let b3 = Belief::point_mass(3, 0).unwrap();
        assert!(discounted_delta_value(&g, &b3, 0.0).is_err());
        let b = Belief::binary(0.5).unwrap();
        assert!(discounted_delta_value(&g, &b, 1.5).is_err());
        assert!(state_value_upper(&g, 5, 0.0).is_err());
    }

    #[test]
    fn value_is_monotone_in_belief_and_play() {
        let g = GameSpec::canonical();
        let mut prev = f64::NEG_INFINITY;
        for m in 0..=20 {
            let mu = m as f64 / 20.0;
            let b = Belief::binary(mu).unwrap();
            let v = discounted_delta_value(&g, &b, 0.3).unwrap();
            assert!(v > prev);
            prev = v;
        }
        let b = Belief::binary(0.4).unwrap();
        let mut prev = f64::NEG_INFINITY;
        for k in 0..=20 {
            let a = k as f64 / 20.0;
            let v = discounted_delta_value(&g, &b, a).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }
}
