//! Dominance thresholds: exact solves and tabulated fast paths.
//!
//! For a binary game the commitment value `ΔV(μ, A) = (1-μ)·V_0(A) + μ·V_1(A)`
//! is linear in `μ`, so each threshold is the bracketed root of a monotone
//! linear function once the two per-state values are computed. The exact
//! operations below cache the per-state values and bisect to
//! [`puts_game::roots::DEFAULT_TOL`].
//!
//! [`DominanceThresholds`] tabulates both thresholds on a uniform grid over
//! `A ∈ [0, 1]` and serves interpolated queries for simulation hot loops.
//! The tables are built from the exact solves, so grid nodes carry
//! bisection-grade accuracy; between nodes the interpolation error is the
//! usual `O(h²)` (identically zero for games whose thresholds are linear
//! in `A`, such as the affine canonical benchmark).

use serde::{Deserialize, Serialize};

use puts_game::roots::{bisect, DEFAULT_TOL};
use puts_game::{state_value_lower, state_value_upper, Belief, GameSpec};

use crate::error::DominanceError;

/// Maximum bisection iterations for threshold solves (bracket width halves
/// each step; 200 is far beyond what 1e-10 needs).
const MAX_BISECT_ITER: usize = 200;

/// Per-state commitment values at a fixed aggregate-play level.
#[derive(Debug, Clone)]
pub(crate) struct StateValues {
    /// Upper-path (optimistic) values `V_θ(A)`, one per state.
    pub upper: Vec<f64>,
    /// Lower-path (pessimistic) values `W_θ(A)`, one per state.
    pub lower: Vec<f64>,
}

pub(crate) fn state_values(game: &GameSpec, a: f64) -> Result<StateValues, DominanceError> {
    let n = game.n_states();
    let mut upper = Vec::with_capacity(n);
    let mut lower = Vec::with_capacity(n);
    for s in 0..n {
        upper.push(state_value_upper(game, s, a)?);
        lower.push(state_value_lower(game, s, a)?);
    }
    Ok(StateValues { upper, lower })
}

/// Root in `α` of the linear function `(1-α)·v0 + α·v1`, clamped to 0 when
/// already non-negative at `α = 0`, solved by bisection for a binary game.
fn binary_threshold_from_values(v0: f64, v1: f64) -> Result<f64, DominanceError> {
    if v0 >= 0.0 {
        // Action 1 already (weakly) preferred at zero weight on the
        // dominant state: the region is empty at this play level.
        return Ok(0.0);
    }
    if v1 <= 0.0 {
        return Err(DominanceError::invariant(format!(
            "dominant-state commitment value must be positive, got {v1}"
        )));
    }
    let f = |alpha: f64| (1.0 - alpha) * v0 + alpha * v1;
    Ok(bisect(f, 0.0, 1.0, DEFAULT_TOL, MAX_BISECT_ITER)?)
}

fn require_binary(game: &GameSpec, op: &str) -> Result<(), DominanceError> {
    if !game.is_binary() {
        return Err(DominanceError::domain(format!(
            "{op} requires a binary game (got {} states); reduce along a belief direction first",
            game.n_states()
        )));
    }
    Ok(())
}

fn check_play(a: f64) -> Result<(), DominanceError> {
    if !(0.0..=1.0).contains(&a) {
        return Err(DominanceError::domain(format!(
            "aggregate play must lie in [0, 1], got {a}"
        )));
    }
    Ok(())
}

/// Lower-dominance threshold `ψ_LD(A)` of a binary game: the belief weight
/// on the dominant state at which the optimistic commitment value crosses
/// zero. Returns 0 when even zero weight yields a non-negative value.
pub fn lower_dominance_threshold(game: &GameSpec, a: f64) -> Result<f64, DominanceError> {
    require_binary(game, "lower_dominance_threshold")?;
    check_play(a)?;
    let vals = state_values(game, a)?;
    binary_threshold_from_values(vals.upper[0], vals.upper[1])
}

/// Upper-dominance threshold `ψ_UD(A)` of a binary game: the belief weight
/// at which the pessimistic commitment value crosses zero, clamped to
/// `[0, 1]`.
pub fn upper_dominance_threshold(game: &GameSpec, a: f64) -> Result<f64, DominanceError> {
    require_binary(game, "upper_dominance_threshold")?;
    check_play(a)?;
    let vals = state_values(game, a)?;
    binary_threshold_from_values(vals.lower[0], vals.lower[1])
}

/// Lower-dominance threshold along a belief direction of a multi-state
/// game, expressed as the critical weight `α` on the dominant state along
/// the segment from the direction's off-dominant mixture to the
/// dominant-state vertex.
pub fn lower_dominance_threshold_slice(
    game: &GameSpec,
    direction: &[f64],
    a: f64,
) -> Result<f64, DominanceError> {
    let reduced = game.slice_reduction(direction)?;
    lower_dominance_threshold(&reduced, a)
}

/// Upper-dominance threshold along a belief direction (see
/// [`lower_dominance_threshold_slice`]).
pub fn upper_dominance_threshold_slice(
    game: &GameSpec,
    direction: &[f64],
    a: f64,
) -> Result<f64, DominanceError> {
    let reduced = game.slice_reduction(direction)?;
    upper_dominance_threshold(&reduced, a)
}

/// Exact membership test for the (open) lower-dominance region: the
/// optimistic commitment value is strictly negative. Works for any number
/// of states.
pub fn in_lower_dominance_exact(
    game: &GameSpec,
    belief: &Belief,
    a: f64,
) -> Result<bool, DominanceError> {
    check_play(a)?;
    Ok(puts_game::discounted_delta_value(game, belief, a)? < 0.0)
}

/// Tabulated dominance thresholds of a binary game on a uniform grid over
/// `A ∈ [0, 1]`, with interpolated queries for hot paths and exact-solve
/// construction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DominanceThresholds {
    game: GameSpec,
    a_grid: Vec<f64>,
    psi_ld: Vec<f64>,
    psi_ud: Vec<f64>,
}

impl DominanceThresholds {
    /// Build tables with `n_points ≥ 2` exact solves per threshold.
    pub fn build(game: &GameSpec, n_points: usize) -> Result<Self, DominanceError> {
        require_binary(game, "DominanceThresholds::build")?;
        if n_points < 2 {
            return Err(DominanceError::domain(format!(
                "threshold table needs at least 2 points, got {n_points}"
            )));
        }
        let mut a_grid = Vec::with_capacity(n_points);
        let mut psi_ld = Vec::with_capacity(n_points);
        let mut psi_ud = Vec::with_capacity(n_points);
        for k in 0..n_points {
            let a = k as f64 / (n_points - 1) as f64;
            let vals = state_values(game, a)?;
            let ld = binary_threshold_from_values(vals.upper[0], vals.upper[1])?;
            let ud = binary_threshold_from_values(vals.lower[0], vals.lower[1])?;
            if ud < ld - 1e-9 {
                return Err(DominanceError::invariant(format!(
                    "thresholds inverted at A = {a}: ψ_LD = {ld} > ψ_UD = {ud}"
                )));
            }
            a_grid.push(a);
            psi_ld.push(ld);
            psi_ud.push(ud);
        }
        // Thresholds must be non-increasing in A (more play ahead makes
        // action 1 weakly more attractive).
        for w in psi_ld.windows(2) {
            if w[1] > w[0] + 1e-9 {
                return Err(DominanceError::invariant(
                    "lower-dominance threshold is not non-increasing in A".to_string(),
                ));
            }
        }
        for w in psi_ud.windows(2) {
            if w[1] > w[0] + 1e-9 {
                return Err(DominanceError::invariant(
                    "upper-dominance threshold is not non-increasing in A".to_string(),
                ));
            }
        }
        Ok(DominanceThresholds {
            game: game.clone(),
            a_grid,
            psi_ld,
            psi_ud,
        })
    }

    /// The game these tables were built for.
    pub fn game(&self) -> &GameSpec {
        &self.game
    }

    /// Grid over aggregate play.
    pub fn a_grid(&self) -> &[f64] {
        &self.a_grid
    }

    /// Tabulated lower-dominance threshold values.
    pub fn psi_ld_table(&self) -> &[f64] {
        &self.psi_ld
    }

    /// Tabulated upper-dominance threshold values.
    pub fn psi_ud_table(&self) -> &[f64] {
        &self.psi_ud
    }

    /// Interpolated `ψ_LD(A)`.
    pub fn psi_ld(&self, a: f64) -> f64 {
        interp_uniform(&self.a_grid, &self.psi_ld, a)
    }

    /// Interpolated `ψ_UD(A)`.
    pub fn psi_ud(&self, a: f64) -> f64 {
        interp_uniform(&self.a_grid, &self.psi_ud, a)
    }

    /// Largest gap `max_A (ψ_UD - ψ_LD)` over the grid: the radius of the
    /// initial undetermined band.
    pub fn initial_radius(&self) -> f64 {
        self.psi_ud
            .iter()
            .zip(self.psi_ld.iter())
            .map(|(u, l)| u - l)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Fast membership test for the open lower-dominance region at
    /// interpolation precision: `μ(θ*) < ψ_LD(A)`.
    pub fn in_lower_dominance(&self, belief: &Belief, a: f64) -> bool {
        debug_assert!(belief.is_binary());
        belief.weight(1) < self.psi_ld(a)
    }

    /// Distance from a belief outside the lower-dominance region to the
    /// region (including the absorbing zero-weight boundary): the excess
    /// weight on the dominant state above the threshold.
    ///
    /// Errors if the belief lies strictly inside the region at this
    /// table's precision.
    pub fn distance(&self, belief: &Belief, a: f64) -> Result<f64, DominanceError> {
        if !belief.is_binary() {
            return Err(DominanceError::domain(
                "distance requires a binary belief; reduce along a direction first".to_string(),
            ));
        }
        let d = belief.weight(1) - self.psi_ld(a);
        if d < 0.0 {
            return Err(DominanceError::precondition(format!(
                "belief weight {} lies inside the lower-dominance region at A = {a} (threshold {})",
                belief.weight(1),
                self.psi_ld(a)
            )));
        }
        Ok(d)
    }

    /// Table rows `(A, ψ_LD(A), ψ_UD(A))` for export.
    pub fn to_rows(&self) -> Vec<(f64, f64, f64)> {
        self.a_grid
            .iter()
            .zip(self.psi_ld.iter().zip(self.psi_ud.iter()))
            .map(|(&a, (&l, &u))| (a, l, u))
            .collect()
    }

    /// CSV export with deterministic nine-significant-digit formatting.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("play,lower_threshold,upper_threshold\n");
        for (a, l, u) in self.to_rows() {
            out.push_str(&format!(
                "{},{},{}\n",
                puts_game::format_sig9(a),
                puts_game::format_sig9(l),
                puts_game::format_sig9(u)
            ));
        }
        out
    }
}

/// Linear interpolation on a uniform grid (constant beyond the ends).
fn interp_uniform(grid: &[f64], values: &[f64], x: f64) -> f64 {
    let n = grid.len();
    if x <= grid[0] {
        return values[0];
    }
    if x >= grid[n - 1] {
        return values[n - 1];
    }
    let h = grid[1] - grid[0];
    let idx = ((x - grid[0]) / h) as usize;
    let idx = idx.min(n - 2);
    let t = (x - grid[idx]) / h;
    values[idx] + t * (values[idx + 1] - values[idx])
}
