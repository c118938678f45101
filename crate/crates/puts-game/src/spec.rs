//! Game specifications.
//!
//! A [`GameSpec`] pins down the primitive coordination game:
//!
//! - a finite state space `θ ∈ {0, …, n-1}` with a designated *dominant*
//!   state `θ*` in which action 1 is strictly dominant,
//! - the flow-payoff difference `Δu(A, θ)` of action 1 over action 0 as a
//!   function of aggregate play `A ∈ [0, 1]` and the state,
//! - a discount rate `r > 0` and a Poisson revision rate `λ > 0`.
//!
//! The flow payoff of action 0 is normalized to zero, so `Δu` carries all
//! payoff content. Two payoff families are supported: an affine family
//! `Δu(A, θ) = slope·A + offset_θ` (exact arithmetic, closed-form
//! integrals available downstream) and a tabulated family interpolated
//! linearly on a strictly increasing grid over `[0, 1]`.
//!
//! Structural invariants, checked on a validation grid at construction:
//! `Δu` is strictly increasing in `A` for every state (coordination
//! complementarity), and `Δu(0, θ*) > 0` (dominance of action 1 in `θ*`
//! even when nobody else plays it).

use serde::{Deserialize, Serialize};

use crate::belief::Belief;
use crate::error::GameError;

/// Number of grid points used to validate monotonicity of `Δu` in `A`.
const VALIDATION_GRID: usize = 65;

/// Flow-payoff difference family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum PayoffSpec {
    /// `Δu(A, θ_i) = play_slope · A + state_offsets[i]`.
    Affine {
        play_slope: f64,
        state_offsets: Vec<f64>,
    },
    /// Per-state values on a common strictly increasing grid over `[0, 1]`,
    /// interpolated linearly. `values[i]` is the row for state `i`.
    Tabulated {
        a_grid: Vec<f64>,
        values: Vec<Vec<f64>>,
    },
}

/// A binary-action coordination game with Poisson switching frictions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameSpec {
    payoff: PayoffSpec,
    discount_rate: f64,
    switch_rate: f64,
    dominant_state: usize,
    n_states: usize,
}

impl GameSpec {
    /// Construct and validate a game.
    pub fn new(
        payoff: PayoffSpec,
        discount_rate: f64,
        switch_rate: f64,
        dominant_state: usize,
    ) -> Result<Self, GameError> {
        if !(discount_rate.is_finite() && discount_rate > 0.0) {
            return Err(GameError::domain(format!(
                "discount_rate must be positive, got {discount_rate}"
            )));
        }
        if !(switch_rate.is_finite() && switch_rate > 0.0) {
            return Err(GameError::domain(format!(
                "switch_rate must be positive, got {switch_rate}"
            )));
        }
        let n_states = match &payoff {
            PayoffSpec::Affine { state_offsets, .. } => state_offsets.len(),
            PayoffSpec::Tabulated { values, .. } => values.len(),
        };
        if n_states < 2 {
            return Err(GameError::domain(format!(
                "game needs at least 2 states, got {n_states}"
            )));
        }
        if dominant_state >= n_states {
            return Err(GameError::domain(format!(
                "dominant_state {dominant_state} out of range for {n_states} states"
            )));
        }
        match &payoff {
            PayoffSpec::Affine {
                play_slope,
                state_offsets,
            } => {
                if !play_slope.is_finite() || *play_slope <= 0.0 {
                    return Err(GameError::invariant(format!(
                        "affine play_slope must be positive for complementarity, got {play_slope}"
                    )));
                }
                if state_offsets.iter().any(|o| !o.is_finite()) {
                    return Err(GameError::domain(
                        "affine state offsets must all be finite".to_string(),
                    ));
                }
            }
            PayoffSpec::Tabulated { a_grid, values } => {
                if a_grid.len() < 2 {
                    return Err(GameError::domain(
                        "tabulated payoff grid needs at least 2 points".to_string(),
                    ));
                }
                if (a_grid[0] - 0.0).abs() > 1e-12 || (a_grid[a_grid.len() - 1] - 1.0).abs() > 1e-12
                {
                    return Err(GameError::domain(
                        "tabulated payoff grid must cover [0, 1]".to_string(),
                    ));
                }
                if a_grid.windows(2).any(|w| w[1] <= w[0]) {
                    return Err(GameError::domain(
                        "tabulated payoff grid must be strictly increasing".to_string(),
                    ));
                }
                for (i, row) in values.iter().enumerate() {
                    if row.len() != a_grid.len() {
                        return Err(GameError::domain(format!(
                            "tabulated payoff row {i} has {} entries, grid has {}",
                            row.len(),
                            a_grid.len()
                        )));
                    }
                    if row.iter().any(|v| !v.is_finite()) {
                        return Err(GameError::domain(format!(
                            "tabulated payoff row {i} contains a non-finite value"
                        )));
                    }
                }
            }
        }
        let game = GameSpec {
            payoff,
            discount_rate,
            switch_rate,
            dominant_state,
            n_states,
        };
        game.validate_shape()?;
        Ok(game)
    }

    /// Affine binary convenience constructor:
    /// `Δu(A, θ) = play_slope·A + offsets[θ]` with dominant state 1.
    pub fn affine_binary(
        play_slope: f64,
        offset_state0: f64,
        offset_state1: f64,
        discount_rate: f64,
        switch_rate: f64,
    ) -> Result<Self, GameError> {
        GameSpec::new(
            PayoffSpec::Affine {
                play_slope,
                state_offsets: vec![offset_state0, offset_state1],
            },
            discount_rate,
            switch_rate,
            1,
        )
    }

    /// The canonical two-state benchmark: `Δu(A, θ) = A + 2θ - 1` with
    /// `r = λ = 1` and dominant state 1.
    pub fn canonical() -> Self {
        GameSpec::affine_binary(1.0, -1.0, 1.0, 1.0, 1.0)
            .expect("canonical benchmark game is valid")
    }

    /// Flow-payoff difference `Δu(A, θ)`.
    ///
    /// `A` outside `[0, 1]` is a domain error surfaced via `debug_assert`
    /// in hot paths; callers are expected to pass valid aggregates.
    pub fn delta_u(&self, a: f64, state: usize) -> f64 {
        debug_assert!(state < self.n_states);
        match &self.payoff {
            PayoffSpec::Affine {
                play_slope,
                state_offsets,
            } => play_slope * a + state_offsets[state],
            PayoffSpec::Tabulated { a_grid, values } => {
                let row = &values[state];
                interp_linear(a_grid, row, a)
            }
        }
    }

    /// Expected flow-payoff difference `Σ_θ μ_θ Δu(A, θ)` at belief `μ`.
    pub fn expected_delta_u(&self, belief: &Belief, a: f64) -> f64 {
        belief.expectation(|s| self.delta_u(a, s))
    }

    /// Discount rate `r`.
    pub fn discount_rate(&self) -> f64 {
        self.discount_rate
    }

    /// Poisson revision rate `λ`.
    pub fn switch_rate(&self) -> f64 {
        self.switch_rate
    }

    /// Index of the dominant state `θ*`.
    pub fn dominant_state(&self) -> usize {
        self.dominant_state
    }

    /// Number of states.
    pub fn n_states(&self) -> usize {
        self.n_states
    }

    /// Whether this is a two-state game.
    pub fn is_binary(&self) -> bool {
        self.n_states == 2
    }

    /// The payoff family.
    pub fn payoff(&self) -> &PayoffSpec {
        &self.payoff
    }

    /// Uniform bound `max_{A, θ} |Δu(A, θ)|` over the validation grid
    /// (exact for the affine family, where extremes sit at `A ∈ {0, 1}`).
    pub fn flow_bound(&self) -> f64 {
        let mut best: f64 = 0.0;
        match &self.payoff {
            PayoffSpec::Affine {
                play_slope,
                state_offsets,
            } => {
                for &off in state_offsets {
                    best = best.max((play_slope * 0.0 + off).abs());
                    best = best.max((play_slope * 1.0 + off).abs());
                }
            }
            PayoffSpec::Tabulated { values, .. } => {
                for row in values {
                    for &v in row {
                        best = best.max(v.abs());
                    }
                }
            }
        }
        best
    }

    /// Affine fast-path: returns `(play_slope, state_offsets)` when the
    /// payoff family is affine.
    pub fn affine_parts(&self) -> Option<(f64, &[f64])> {
        match &self.payoff {
            PayoffSpec::Affine {
                play_slope,
                state_offsets,
            } => Some((*play_slope, state_offsets)),
            PayoffSpec::Tabulated { .. } => None,
        }
    }

    /// Reduce a multi-state game to an exact binary game along a belief
    /// direction.
    ///
    /// For a direction `d` with `d_{θ*} = 1` and `d_θ = -w_θ ≤ 0` off the
    /// dominant state (`Σ w_θ = 1`), beliefs on the segment
    /// `μ(α) = α δ_{θ*} + (1-α) ν` with `ν = Σ w_θ δ_θ` form a binary game
    /// whose state 0 is the mixture `ν` and whose state 1 is `θ*`. The
    /// reduction is exact for both payoff families because payoffs mix
    /// linearly in the state.
    pub fn slice_reduction(&self, direction: &[f64]) -> Result<GameSpec, GameError> {
        if direction.len() != self.n_states {
            return Err(GameError::domain(format!(
                "direction has {} components, game has {} states",
                direction.len(),
                self.n_states
            )));
        }
        let d_star = direction[self.dominant_state];
        if (d_star - 1.0).abs() > 1e-9 {
            return Err(GameError::domain(format!(
                "direction must have +1 on the dominant state, got {d_star}"
            )));
        }
        let mut off_weights = Vec::with_capacity(self.n_states);
        let mut total = 0.0;
        for (i, &d) in direction.iter().enumerate() {
            if i == self.dominant_state {
                continue;
            }
            if d > 1e-12 {
                return Err(GameError::domain(format!(
                    "direction component {i} must be non-positive off the dominant state, got {d}"
                )));
            }
            off_weights.push((i, -d));
            total += -d;
        }
        if (total - 1.0).abs() > 1e-9 {
            return Err(GameError::domain(format!(
                "off-dominant direction mass must sum to 1, got {total}"
            )));
        }
        let payoff = match &self.payoff {
            PayoffSpec::Affine {
                play_slope,
                state_offsets,
            } => {
                let mixed: f64 = off_weights
                    .iter()
                    .map(|&(i, w)| w * state_offsets[i])
                    .sum();
                PayoffSpec::Affine {
                    play_slope: *play_slope,
                    state_offsets: vec![mixed, state_offsets[self.dominant_state]],
                }
            }
            PayoffSpec::Tabulated { a_grid, values } => {
                let mixed: Vec<f64> = (0..a_grid.len())
                    .map(|k| off_weights.iter().map(|&(i, w)| w * values[i][k]).sum())
                    .collect();
                PayoffSpec::Tabulated {
                    a_grid: a_grid.clone(),
                    values: vec![mixed, values[self.dominant_state].clone()],
                }
            }
        };
        GameSpec::new(payoff, self.discount_rate, self.switch_rate, 1)
    }

    /// Check strict monotonicity of `Δu` in `A` and dominance of action 1
    /// at `θ*`, on a fixed grid.
    fn validate_shape(&self) -> Result<(), GameError> {
        let h = 1.0 / (VALIDATION_GRID - 1) as f64;
        for state in 0..self.n_states {
            let mut prev = self.delta_u(0.0, state);
            for k in 1..VALIDATION_GRID {
                let a = k as f64 * h;
                let cur = self.delta_u(a, state);
                if cur <= prev {
                    return Err(GameError::invariant(format!(
                        "Δu must be strictly increasing in A; state {state} fails near A={a:.4}"
                    )));
                }
                prev = cur;
            }
        }
        if self.delta_u(0.0, self.dominant_state) <= 0.0 {
            return Err(GameError::invariant(format!(
                "action 1 must be strictly dominant in state {}: Δu(0, θ*) = {} ≤ 0",
                self.dominant_state,
                self.delta_u(0.0, self.dominant_state)
            )));
        }
        Ok(())
    }
}

impl std::fmt::Display for GameSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GameSpec[{} states, r={}, λ={}, θ*={}]",
            self.n_states, self.discount_rate, self.switch_rate, self.dominant_state
        )
    }
}

/// Piecewise-linear interpolation on a strictly increasing grid; constant
/// extrapolation beyond the ends (the grid covers `[0, 1]`, so this only
/// triggers for tiny floating-point overhangs).
fn interp_linear(grid: &[f64], values: &[f64], x: f64) -> f64 {
    if x <= grid[0] {
        return values[0];
    }
    if x >= grid[grid.len() - 1] {
        return values[values.len() - 1];
    }
    // partition_point returns the first index with grid[i] > x.
    let hi = grid.partition_point(|&g| g <= x);
    let lo = hi - 1;
    let t = (x - grid[lo]) / (grid[hi] - grid[lo]);
    values[lo] + t * (values[hi] - values[lo])
}
