//! Schedule-calibration constants of a game.
//!
//! Disclosure schedules are sized by a handful of Lipschitz and margin
//! constants of the commitment-value landscape:
//!
//! - `L`: the largest slope of the per-state optimistic commitment value
//!   in aggregate play, `max_{θ, A} ∂V_θ(A)/∂A` — how fast values react to
//!   play drift;
//! - `l`: the smallest belief-direction slope of the commitment value,
//!   `min_A [V_{θ*}(A) - max_{θ≠θ*} V_θ(A)]` — how strongly beliefs move
//!   values;
//! - `L_ψ = L / l`: bound on the slope of the dominance threshold in `A`;
//! - `M = 2 L_ψ`: the overshoot factor applied to upward belief
//!   corrections;
//! - `C`: the dominant-state value floor `min_A V_{θ*}(A)`;
//! - `δ̄ = min{1, 4L/(λC), 4L/(λCM)}`: cap on the disclosure budget rate;
//! - `ē = λC/(4L)`, `e̲ = λC/(4L(1+M))`, `c_aux = λC/(2L)`: derived rate
//!   constants used by finite-population bounds.
//!
//! A `safety_factor s ∈ (0, 1]` tightens every primitive conservatively
//! (`C·s`, `l·s`, `L/s`) before the derived constants are formed; `s = 1`
//! reproduces the exact values.

use serde::{Deserialize, Serialize};

use puts_game::GameSpec;

use crate::error::DominanceError;
use crate::thresholds::state_values;

/// Default number of grid points for extremizing the constants.
pub const DEFAULT_CONSTANTS_GRID: usize = 256;

/// Default conservative safety factor applied to the primitives.
pub const DEFAULT_SAFETY_FACTOR: f64 = 0.99;

/// Minimum grid size accepted for constants extraction.
const MIN_GRID: usize = 64;

/// Calibration constants of a game (see module docs).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GameConstants {
    /// Largest play-direction slope of per-state optimistic values.
    pub l_play: f64,
    /// Smallest belief-direction slope of the commitment value.
    pub l_belief: f64,
    /// Threshold slope bound `L_ψ = l_play / l_belief`.
    pub l_psi: f64,
    /// Overshoot factor `M = 2 L_ψ`.
    pub overshoot: f64,
    /// Dominant-state value floor `C`.
    pub value_floor: f64,
    /// Disclosure budget cap `δ̄`.
    pub delta_bar: f64,
    /// Uniform flow-payoff bound `max |Δu|`.
    pub flow_bound: f64,
    /// Discount rate `r` of the game.
    pub discount_rate: f64,
    /// Revision rate `λ` of the game.
    pub switch_rate: f64,
    /// Fast rate constant `ē = λC/(4L)`.
    pub rate_upper: f64,
    /// Slow rate constant `e̲ = λC/(4L(1+M))`.
    pub rate_lower: f64,
    /// Auxiliary rate constant `c_aux = λC/(2L)`.
    pub rate_aux: f64,
    /// Safety factor the primitives were tightened by.
    pub safety_factor: f64,
    /// Grid size used for extremization.
    pub grid_points: usize,
}

impl GameConstants {
    /// Compute the constants of a game by extremizing per-state values on
    /// a uniform grid of `grid_points ≥ 64` play levels, then applying the
    /// conservative `safety_factor`.
    pub fn compute(
        game: &GameSpec,
        grid_points: usize,
        safety_factor: f64,
    ) -> Result<Self, DominanceError> {
        if grid_points < MIN_GRID {
            return Err(DominanceError::domain(format!(
                "constants grid needs at least {MIN_GRID} points, got {grid_points}"
            )));
        }
        if !(safety_factor > 0.0 && safety_factor <= 1.0) {
            return Err(DominanceError::domain(format!(
                "safety factor must lie in (0, 1], got {safety_factor}"
            )));
        }
        let n_states = game.n_states();
        let theta_star = game.dominant_state();
        let h = 1.0 / (grid_points - 1) as f64;

        // Tabulate upper-path per-state values on the grid.
        let mut upper: Vec<Vec<f64>> = Vec::with_capacity(grid_points);
        for k in 0..grid_points {
            let a = k as f64 * h;
            upper.push(state_values(game, a)?.upper);
        }

        // L: max forward-difference slope in A over states; also check
        // monotonicity (values must increase in A).
        let mut l_play = f64::NEG_INFINITY;
        for s in 0..n_states {
            for k in 0..grid_points - 1 {
                let slope = (upper[k + 1][s] - upper[k][s]) / h;
                if slope <= 0.0 {
                    return Err(DominanceError::invariant(format!(
                        "per-state value must be increasing in play; state {s} has slope {slope} near A = {}",
                        k as f64 * h
                    )));
                }
                l_play = l_play.max(slope);
            }
        }

        // l: min over A of the gap between the dominant-state value and
        // the best other state's value.
        let mut l_belief = f64::INFINITY;
        for row in &upper {
            let best_other = (0..n_states)
                .filter(|&s| s != theta_star)
                .map(|s| row[s])
                .fold(f64::NEG_INFINITY, f64::max);
            l_belief = l_belief.min(row[theta_star] - best_other);
        }
        if l_belief <= 0.0 {
            return Err(DominanceError::invariant(format!(
                "belief-direction slope must be positive, got {l_belief}"
            )));
        }

        // C: dominant-state value floor.
        let mut value_floor = f64::INFINITY;
        for row in &upper {
            value_floor = value_floor.min(row[theta_star]);
        }
        if value_floor <= 0.0 {
            return Err(DominanceError::invariant(format!(
                "dominant-state value floor must be positive, got {value_floor}"
            )));
        }

        // Conservative adjustment.
        let l_play = l_play / safety_factor;
        let l_belief = l_belief * safety_factor;
        let value_floor = value_floor * safety_factor;

        let l_psi = l_play / l_belief;
        let overshoot = 2.0 * l_psi;
        let lambda = game.switch_rate();
        let delta_bar = 1.0f64
            .min(4.0 * l_play / (lambda * value_floor))
            .min(4.0 * l_play / (lambda * value_floor * overshoot));
        let rate_upper = lambda * value_floor / (4.0 * l_play);
        let rate_lower = lambda * value_floor / (4.0 * l_play * (1.0 + overshoot));
        let rate_aux = lambda * value_floor / (2.0 * l_play);

        Ok(GameConstants {
            l_play,
            l_belief,
            l_psi,
            overshoot,
            value_floor,
            delta_bar,
            flow_bound: game.flow_bound(),
            discount_rate: game.discount_rate(),
            switch_rate: lambda,
            rate_upper,
            rate_lower,
            rate_aux,
            safety_factor,
            grid_points,
        })
    }
}

impl std::fmt::Display for GameConstants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "L       = {}", puts_game::format_sig9(self.l_play))?;
        writeln!(f, "l       = {}", puts_game::format_sig9(self.l_belief))?;
        writeln!(f, "L_psi   = {}", puts_game::format_sig9(self.l_psi))?;
        writeln!(f, "M       = {}", puts_game::format_sig9(self.overshoot))?;
        writeln!(f, "C       = {}", puts_game::format_sig9(self.value_floor))?;
        writeln!(f, "delta   = {}", puts_game::format_sig9(self.delta_bar))?;
        writeln!(f, "flow    = {}", puts_game::format_sig9(self.flow_bound))?;
        writeln!(f, "e_upper = {}", puts_game::format_sig9(self.rate_upper))?;
        writeln!(f, "e_lower = {}", puts_game::format_sig9(self.rate_lower))?;
        write!(f, "c_aux   = {}", puts_game::format_sig9(self.rate_aux))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn canonical_constants_exact() {
        let g = GameSpec::canonical();
        let c = GameConstants::compute(&g, 256, 1.0).unwrap();
        // V_θ(A) = -(1-A)/3 + θ: slope 1/3 in A for both states.
        assert_abs_diff_eq!(c.l_play, 1.0 / 3.0, epsilon = 1e-8);
        // V_1 - V_0 = 1 at every A.
        assert_abs_diff_eq!(c.l_belief, 1.0, epsilon = 1e-8);
        assert_abs_diff_eq!(c.l_psi, 1.0 / 3.0, epsilon = 1e-8);
        assert_abs_diff_eq!(c.overshoot, 2.0 / 3.0, epsilon = 1e-8);
        // C = min_A V_1(A) = V_1(0) = 2/3.
        assert_abs_diff_eq!(c.value_floor, 2.0 / 3.0, epsilon = 1e-8);
        // δ̄ = min{1, 2, 3} = 1.
        assert_abs_diff_eq!(c.delta_bar, 1.0, epsilon = 1e-8);
        assert_abs_diff_eq!(c.flow_bound, 2.0, epsilon = 1e-15);
        // ē = 0.5, e̲ = 0.3, c_aux = 1.
        assert_abs_diff_eq!(c.rate_upper, 0.5, epsilon = 1e-8);
        assert_abs_diff_eq!(c.rate_lower, 0.3, epsilon = 1e-8);
        assert_abs_diff_eq!(c.rate_aux, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn safety_factor_is_conservative() {
        let g = GameSpec::canonical();
        let exact = GameConstants::compute(&g, 128, 1.0).unwrap();
        let safe = GameConstants::compute(&g, 128, 0.99).unwrap();
        assert!(safe.value_floor < exact.value_floor);
        assert!(safe.l_play > exact.l_play);
        assert!(safe.l_belief < exact.l_belief);
        assert!(safe.overshoot > exact.overshoot);
        assert!(safe.rate_lower < exact.rate_lower);
    }

    #[test]
    fn grid_and_safety_validation() {
        let g = GameSpec::canonical();
        assert!(GameConstants::compute(&g, 16, 1.0).is_err());
        assert!(GameConstants::compute(&g, 128, 0.0).is_err());
        assert!(GameConstants::compute(&g, 128, 1.5).is_err());
    }
}
