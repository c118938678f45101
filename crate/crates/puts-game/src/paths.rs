//! Aggregate-play paths under Poisson revision.
//!
//! Each agent's action is re-drawn at Poisson rate `λ`. When, at a moment of
//! revision, a fraction `u` of revising agents choose action 1 and a
//! fraction `d` choose action 0 (constant over a time window), the aggregate
//! play solves `dA = λ [ u·(1 - A) - d·A ] dt` and has the closed form
//!
//! `A_t = A_∞ + (A_0 - A_∞) · exp(-λ (u + d) t)`,  `A_∞ = u / (u + d)`,
//!
//! with `A` frozen when `u = d = 0`. The two extreme regimes are the
//! *upper path* (`u = 1, d = 0`: everyone revising switches up) and the
//! *lower path* (`u = 0, d = 1`).

use serde::{Deserialize, Serialize};

use crate::error::GameError;

/// Constant revision flow: the fractions of revising agents choosing
/// action 1 (`up`) and action 0 (`down`). Both lie in `[0, 1]`; they need
/// not sum to 1 (agents keeping their current action are simply part of
/// whichever fraction matches it, so `up + down ≤ 1` is *not* required —
/// what matters is the net drift).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Flow {
    pub up: f64,
    pub down: f64,
}

impl Flow {
    /// Everyone revising switches to action 1.
    pub const UP: Flow = Flow { up: 1.0, down: 0.0 };
    /// Everyone revising switches to action 0.
    pub const DOWN: Flow = Flow { up: 0.0, down: 1.0 };
    /// Nobody moves: aggregate play is frozen.
    pub const FREEZE: Flow = Flow { up: 0.0, down: 0.0 };

    /// Validated constructor.
    pub fn new(up: f64, down: f64) -> Result<Flow, GameError> {
        if !(0.0..=1.0).contains(&up) || !(0.0..=1.0).contains(&down) {
            return Err(GameError::domain(format!(
                "flow fractions must lie in [0, 1], got up={up}, down={down}"
            )));
        }
        Ok(Flow { up, down })
    }

    /// Long-run limit `u / (u + d)`, or `None` for the frozen flow.
    pub fn target(&self) -> Option<f64> {
        let k = self.up + self.down;
        if k == 0.0 {
            None
        } else {
            Some(self.up / k)
        }
    }

    /// Exponential relaxation rate `λ (u + d)` toward the target.
    pub fn rate(&self, switch_rate: f64) -> f64 {
        switch_rate * (self.up + self.down)
    }

    /// Aggregate play after time `dt` starting from `a0` under this flow.
    pub fn advance(&self, a0: f64, switch_rate: f64, dt: f64) -> f64 {
        debug_assert!(dt >= 0.0);
        match self.target() {
            None => a0,
            Some(a_inf) => a_inf + (a0 - a_inf) * (-self.rate(switch_rate) * dt).exp(),
        }
    }
}

impl std::fmt::Display for Flow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "flow(up={}, down={})", self.up, self.down)
    }
}

/// Upper aggregate-play path `Ā_t = 1 - (1 - a0) e^{-λ t}` started at `a0`.
pub fn upper_play_path(a0: f64, switch_rate: f64, t: f64) -> Result<f64, GameError> {
    check_path_args(a0, switch_rate, t)?;
    Ok(1.0 - (1.0 - a0) * (-switch_rate * t).exp())
}

/// Lower aggregate-play path `A̲_t = a0 e^{-λ t}` started at `a0`.
pub fn lower_play_path(a0: f64, switch_rate: f64, t: f64) -> Result<f64, GameError> {
    check_path_args(a0, switch_rate, t)?;
    Ok(a0 * (-switch_rate * t).exp())
}

fn check_path_args(a0: f64, switch_rate: f64, t: f64) -> Result<(), GameError> {
    if !(0.0..=1.0).contains(&a0) {
        return Err(GameError::domain(format!(
            "initial aggregate play must lie in [0, 1], got {a0}"
        )));
    }
    if !(switch_rate.is_finite() && switch_rate > 0.0) {
        return Err(GameError::domain(format!(
            "switch_rate must be positive, got {switch_rate}"
        )));
    }
    if !(t.is_finite() && t >= 0.0) {
        return Err(GameError::domain(format!(
            "path time must be finite and non-negative, got {t}"
        )));
    }
    Ok(())
}

/// A deterministic piecewise-constant-flow path specification: the flow in
/// force on `[breaks[k-1], breaks[k])` is `flows[k]`, with `breaks`
/// strictly increasing and `flows.len() == breaks.len() + 1` (the final
/// flow persists forever).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathSpec {
    pub a0: f64,
    pub breaks: Vec<f64>,
    pub flows: Vec<Flow>,
}

impl PathSpec {
    /// Validated constructor.
    pub fn new(a0: f64, breaks: Vec<f64>, flows: Vec<Flow>) -> Result<Self, GameError> {
        if !(0.0..=1.0).contains(&a0) {
            return Err(GameError::domain(format!(
                "initial aggregate play must lie in [0, 1], got {a0}"
            )));
        }
        if flows.len() != breaks.len() + 1 {
            return Err(GameError::domain(format!(
                "need breaks.len() + 1 flows, got {} breaks and {} flows",
                breaks.len(),
                flows.len()
            )));
        }
        if breaks.iter().any(|b| !b.is_finite() || *b <= 0.0) {
            return Err(GameError::domain(
                "breakpoints must be finite and positive".to_string(),
            ));
        }
        if breaks.windows(2).any(|w| w[1] <= w[0]) {
            return Err(GameError::domain(
                "breakpoints must be strictly increasing".to_string(),
            ));
        }
        Ok(PathSpec { a0, breaks, flows })
    }

    /// Constant-flow path.
    pub fn constant(a0: f64, flow: Flow) -> Result<Self, GameError> {
        PathSpec::new(a0, vec![], vec![flow])
    }

    /// Aggregate play at time `t ≥ 0`.
    pub fn value_at(&self, switch_rate: f64, t: f64) -> f64 {
        debug_assert!(t >= 0.0);
        let mut a = self.a0;
        let mut t0 = 0.0;
        for (k, &b) in self.breaks.iter().enumerate() {
            if t < b {
                return self.flows[k].advance(a, switch_rate, t - t0);
            }
            a = self.flows[k].advance(a, switch_rate, b - t0);
            t0 = b;
        }
        self.flows[self.flows.len() - 1].advance(a, switch_rate, t - t0)
    }

    /// The flow in force at time `t`.
    pub fn flow_at(&self, t: f64) -> Flow {
        let k = self.breaks.partition_point(|&b| b <= t);
        self.flows[k]
    }

    /// Long-run limit of the path (the last flow's target, or the play
    /// level reached at the final breakpoint if the last flow is frozen).
    pub fn limit(&self, switch_rate: f64) -> f64 {
        let last = self.flows[self.flows.len() - 1];
        match last.target() {
            Some(a_inf) => a_inf,
            None => match self.breaks.last() {
                Some(&b) => self.value_at(switch_rate, b),
                None => self.a0,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn flow_targets_and_rates() {
        assert_eq!(Flow::UP.target(), Some(1.0));
        assert_eq!(Flow::DOWN.target(), Some(0.0));
        assert_eq!(Flow::FREEZE.target(), None);
        let f = Flow::new(0.3, 0.1).unwrap();
        assert_abs_diff_eq!(f.target().unwrap(), 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(f.rate(2.0), 0.8, epsilon = 1e-15);
    }

    #[test]
    fn upper_and_lower_paths_match_closed_forms() {
        // Ā_1 from 0 with λ=1: 1 - e^{-1}.
        assert_abs_diff_eq!(
            upper_play_path(0.0, 1.0, 1.0).unwrap(),
            0.6321205588285577,
            epsilon = 1e-12
        );
        // A̲_1 from 1 with λ=1: e^{-1}.
        assert_abs_diff_eq!(
            lower_play_path(1.0, 1.0, 1.0).unwrap(),
            0.36787944117144233,
            epsilon = 1e-12
        );
        // Flow forms agree with the dedicated helpers.
        for k in 0..=20 {
            let t = k as f64 * 0.35;
            assert_abs_diff_eq!(
                Flow::UP.advance(0.25, 1.3, t),
                upper_play_path(0.25, 1.3, t).unwrap(),
                epsilon = 1e-14
            );
            assert_abs_diff_eq!(
                Flow::DOWN.advance(0.25, 1.3, t),
                lower_play_path(0.25, 1.3, t).unwrap(),
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn path_args_validated() {
        assert!(upper_play_path(-0.1, 1.0, 1.0).is_err());
        assert!(upper_play_path(0.5, 0.0, 1.0).is_err());
        assert!(upper_play_path(0.5, 1.0, -1.0).is_err());
        assert!(lower_play_path(1.5, 1.0, 1.0).is_err());
    }

    #[test]
    fn piecewise_path_semigroup_consistency() {
        // Running UP for s then DOWN for t equals the piecewise path value.
        let p = PathSpec::new(0.2, vec![0.7], vec![Flow::UP, Flow::DOWN]).unwrap();
        let mid = Flow::UP.advance(0.2, 1.0, 0.7);
        let end = Flow::DOWN.advance(mid, 1.0, 0.5);
        assert_abs_diff_eq!(p.value_at(1.0, 1.2), end, epsilon = 1e-14);
        assert_eq!(p.flow_at(0.3), Flow::UP);
        assert_eq!(p.flow_at(0.9), Flow::DOWN);
        assert_abs_diff_eq!(p.limit(1.0), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn frozen_tail_limit_is_value_at_last_break() {
        let p = PathSpec::new(0.0, vec![1.0], vec![Flow::UP, Flow::FREEZE]).unwrap();
        let at_break = Flow::UP.advance(0.0, 1.0, 1.0);
        assert_abs_diff_eq!(p.limit(1.0), at_break, epsilon = 1e-15);
        assert_abs_diff_eq!(p.value_at(1.0, 5.0), at_break, epsilon = 1e-15);
    }
}
