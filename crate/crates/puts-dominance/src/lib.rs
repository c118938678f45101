//! Dominance geometry for coordination games with switching frictions.
//!
//! Action choice in these games is pinned down by two belief thresholds at
//! each aggregate-play level `A`:
//!
//! - the **lower-dominance threshold** `ψ_LD(A)`: below it, action 0 is
//!   strictly dominant even against the most optimistic feasible path of
//!   future play (everyone revising switches up);
//! - the **upper-dominance threshold** `ψ_UD(A)`: above it, action 1 is
//!   strictly dominant even against the most pessimistic path (everyone
//!   revising switches down).
//!
//! Both thresholds solve `ΔV = 0` where `ΔV` is the expected discounted
//! commitment value from [`puts_game::discounted_delta_value`] against the
//! respective reference path; `ΔV` is linear in the belief, so each solve
//! is a bracketed root of a monotone scalar function.
//!
//! The crate also provides:
//!
//! - [`GameConstants`]: the Lipschitz/margin constants of the game that
//!   calibrate disclosure schedules (slopes `L`, `l`, threshold slope bound
//!   `L_ψ`, overshoot factor `M`, dominant-state value floor `C`, budget
//!   cap `δ̄`, and derived rate constants),
//! - [`escape_probability`] / [`escape_split`]: the maximal probability
//!   with which a belief inside the lower-dominance region can be split
//!   onto beliefs outside it, and the corresponding maximal two-atom
//!   signal with a margin `η`,
//! - [`belief_direction`]: the unit direction from a belief toward the
//!   dominant-state vertex, used to reduce multi-state geometry to exact
//!   binary slices via [`puts_game::GameSpec::slice_reduction`].

pub mod constants;
pub mod error;
pub mod escape;
pub mod thresholds;

pub use constants::GameConstants;
pub use error::DominanceError;
pub use escape::{belief_direction, escape_probability, escape_split};
pub use thresholds::{
    in_lower_dominance_exact, lower_dominance_threshold, lower_dominance_threshold_slice,
    upper_dominance_threshold, upper_dominance_threshold_slice, DominanceThresholds,
};
