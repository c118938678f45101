//! Escape probabilities and maximal escape signals.
//!
//! A belief `μ` strictly inside the lower-dominance region at play level
//! `A` cannot be moved outside with certainty, but part of its mass can:
//! the **escape probability** `p*(μ, A)` is the largest `p` such that some
//! sub-probability vector `w ≤ μ` with total mass `p` scales to a belief
//! `w/p` outside the (open) region. Because the region is a half-space of
//! the commitment value `Σ_θ w_θ V_θ(A) ≥ 0`, the maximal `w` solves a
//! fractional knapsack: take mass from states in decreasing order of
//! `V_θ(A)`, stopping when the value budget is exhausted.
//!
//! The **maximal escape signal** with margin `η ∈ (0, p*)` posts two
//! atoms: with probability `p* - η` a posterior strictly outside the
//! region (built from `w` with `η` of its worst-value mass removed) and
//! with the remaining probability the pessimistic residual posterior. In
//! the binary case this is exactly `μ⁺ = μ/(p* - η)` on the dominant
//! coordinate with residual posterior at the zero vertex.

use puts_game::{Belief, GameSpec, SignalSplit, SplitAtom, SplitLabel};

use crate::error::DominanceError;
use crate::thresholds::state_values;

/// Unit direction from a belief toward the dominant-state vertex:
/// `d = (δ_{θ*} - μ) / (1 - μ_{θ*})`. Its dominant coordinate is `+1`, its
/// other coordinates are non-positive with total mass `-1` (for a binary
/// belief: `d = (-1, +1)`).
pub fn belief_direction(belief: &Belief, dominant_state: usize) -> Result<Vec<f64>, DominanceError> {
    if dominant_state >= belief.n_states() {
        return Err(DominanceError::domain(format!(
            "dominant state {dominant_state} out of range for {} states",
            belief.n_states()
        )));
    }
    let mu_star = belief.weight(dominant_state);
    let denom = 1.0 - mu_star;
    if denom <= 0.0 {
        return Err(DominanceError::domain(
            "belief direction is undefined at the dominant-state vertex".to_string(),
        ));
    }
    Ok((0..belief.n_states())
        .map(|s| {
            if s == dominant_state {
                1.0
            } else {
                -belief.weight(s) / denom
            }
        })
        .collect())
}

/// Greedy solution of the escape knapsack: returns `(p*, w)` where `w ≤ μ`
/// has total mass `p*` and non-negative commitment value
/// `Σ w_θ V_θ(A) ≥ 0`.
fn escape_knapsack(belief: &Belief, upper_values: &[f64]) -> (f64, Vec<f64>) {
    let n = belief.n_states();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| upper_values[b].partial_cmp(&upper_values[a]).expect("finite values"));

    let mut w = vec![0.0; n];
    let mut p = 0.0;
    let mut budget = 0.0;
    for &s in &order {
        let v = upper_values[s];
        let mass = belief.weight(s);
        if mass == 0.0 {
            continue;
        }
        if v >= 0.0 {
            w[s] = mass;
            p += mass;
            budget += mass * v;
        } else {
            let take = (budget / -v).min(mass);
            if take <= 0.0 {
                break;
            }
            w[s] = take;
            p += take;
            budget += take * v;
            if take < mass {
                break;
            }
        }
    }
    (p, w)
}

/// Maximal probability with which `μ` can be split onto beliefs outside
/// the open lower-dominance region at play level `a`.
///
/// Equals 1 when `μ` is already (weakly) outside. For a binary game it
/// reduces to `μ(θ*) / ψ_LD(A)`, and equals 0 at the absorbing zero-weight
/// belief (in particular whenever `μ(θ*) = 0`, including the degenerate
/// corner where the threshold itself is 0).
pub fn escape_probability(
    game: &GameSpec,
    belief: &Belief,
    a: f64,
) -> Result<f64, DominanceError> {
    let (p, _) = escape_state(game, belief, a)?;
    Ok(p)
}

/// Shared computation for [`escape_probability`] and [`escape_split`]:
/// `(p*, w)` or `p* = 1` with `w = μ` outside the region.
fn escape_state(
    game: &GameSpec,
    belief: &Belief,
    a: f64,
) -> Result<(f64, Vec<f64>), DominanceError> {
    if belief.n_states() != game.n_states() {
        return Err(DominanceError::domain(format!(
            "belief has {} states, game has {}",
            belief.n_states(),
            game.n_states()
        )));
    }
    if !(0.0..=1.0).contains(&a) {
        return Err(DominanceError::domain(format!(
            "aggregate play must lie in [0, 1], got {a}"
        )));
    }
    // Absorbing convention for binary games: with no mass on the dominant
    // state nothing can be disclosed, even at play levels where the
    // threshold degenerates to zero.
    if game.is_binary() && belief.weight(game.dominant_state()) == 0.0 {
        return Ok((0.0, vec![0.0; belief.n_states()]));
    }
    let vals = state_values(game, a)?;
    let delta_v = belief.dot(&vals.upper);
    if delta_v >= 0.0 {
        return Ok((1.0, belief.weights().to_vec()));
    }
    Ok(escape_knapsack(belief, &vals.upper))
}

/// The maximal escape signal with margin `η`: two atoms
/// `(p* - η) → μ⁺` (strictly outside the region) and
/// `(1 - p* + η) → μ⁻` (the pessimistic residual).
///
/// Preconditions: `μ` weakly inside the region (`ΔV(μ, A) ≤ 0`) and
/// `0 < η < p*(μ, A)`; the scaled posterior must stay inside the simplex.
pub fn escape_split(
    game: &GameSpec,
    belief: &Belief,
    a: f64,
    eta: f64,
) -> Result<SignalSplit, DominanceError> {
    if !(eta.is_finite() && eta > 0.0) {
        return Err(DominanceError::parameter(format!(
            "escape margin must be positive, got {eta}"
        )));
    }
    let vals = state_values(game, a)?;
    let delta_v = belief.dot(&vals.upper);
    if delta_v > 0.0 {
        return Err(DominanceError::precondition(format!(
            "belief is strictly outside the lower-dominance region (value {delta_v}); nothing to escape"
        )));
    }
    let (p_star, w) = escape_state(game, belief, a)?;
    if eta >= p_star {
        return Err(DominanceError::parameter(format!(
            "escape margin {eta} is not below the escape probability {p_star}"
        )));
    }
    let p_up = p_star - eta;

    // Remove η of w's mass starting from the worst-value states, so the
    // scaled posterior gains a strict value margin.
    let n = belief.n_states();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| {
        vals.upper[x]
            .partial_cmp(&vals.upper[y])
            .expect("finite values")
    });
    let mut kept = w.clone();
    let mut to_remove = eta;
    for &s in &order {
        if to_remove <= 0.0 {
            break;
        }
        let cut = kept[s].min(to_remove);
        kept[s] -= cut;
        to_remove -= cut;
    }
    if to_remove > 1e-15 {
        return Err(DominanceError::parameter(format!(
            "escape margin {eta} exceeds the removable mass {p_star}"
        )));
    }

    let up_weights: Vec<f64> = kept.iter().map(|&k| k / p_up).collect();
    if up_weights.iter().any(|&x| x > 1.0 + 1e-12) {
        return Err(DominanceError::parameter(format!(
            "escape margin {eta} pushes the escape posterior outside the simplex"
        )));
    }
    let up_weights: Vec<f64> = up_weights.iter().map(|&x| x.min(1.0)).collect();
    let posterior_up = Belief::new(up_weights).map_err(|e| {
        DominanceError::invariant(format!("escape posterior failed validation: {e}"))
    })?;

    let p_down = 1.0 - p_up;
    let down_weights: Vec<f64> = (0..n)
        .map(|s| ((belief.weight(s) - kept[s]) / p_down).max(0.0))
        .collect();
    let posterior_down = Belief::new(down_weights).map_err(|e| {
        DominanceError::invariant(format!("residual posterior failed validation: {e}"))
    })?;

    Ok(SignalSplit::new(
        SplitLabel::Jump,
        vec![
            SplitAtom {
                probability: p_up,
                posterior: posterior_up,
            },
            SplitAtom {
                probability: p_down,
                posterior: posterior_down,
            },
        ],
        belief,
    )
    .map_err(|e| DominanceError::invariant(format!("escape split failed validation: {e}")))?)
}
