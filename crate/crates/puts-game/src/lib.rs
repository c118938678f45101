//! Core model layer for binary-action coordination games with switching
//! frictions.
//!
//! A continuum (or large finite population) of agents each hold a binary
//! action `a ∈ {0, 1}` and receive revision opportunities at Poisson rate
//! `λ`. The payoff-relevant state `θ` is drawn from a finite set and never
//! changes; agents share a common belief `μ` over states that is moved only
//! by signals from an information designer. The aggregate play `A_t ∈ [0, 1]`
//! is the population fraction currently at action 1 and evolves continuously:
//! between revision-flow changes it relaxes exponentially toward the target
//! determined by who is currently switching up or down.
//!
//! This crate owns the vocabulary shared by every other layer:
//!
//! - [`GameSpec`]: the primitive game — flow-payoff differences
//!   `Δu(A, θ)` (affine family or tabulated), discount rate, switching rate,
//!   and the dominant state.
//! - [`Belief`]: a point in the simplex over states, with exact-arithmetic
//!   constructors for the binary case.
//! - [`paths`]: closed-form aggregate-play paths under constant revision
//!   flows (all-up, all-down, general two-sided flow).
//! - [`discounted_delta_value`]: the expected discounted payoff difference
//!   of committing to action 1 versus 0 when everyone else plays the all-up
//!   path — the object whose sign defines dominance regions.
//! - [`PayoffFunctional`] and [`Trajectory`]: designer objectives evaluated
//!   on recorded simulation paths, with exact per-segment integration.
//! - [`SignalSplit`]: a finite-support signal (posterior atoms with
//!   probabilities) satisfying the martingale property.
//! - [`quad`] / [`roots`]: adaptive Gauss–Kronrod quadrature and bisection,
//!   the only numerical kernels used anywhere in the workspace.
//!
//! # Numerical conventions
//!
//! - All quadrature goes through [`quad::integrate`] with absolute tolerance
//!   `1e-10` unless a caller tightens it.
//! - Infinite-horizon discounted integrals are truncated at a horizon `T`
//!   chosen so the analytically-bounded tail is below `1e-12`, and the tail
//!   of the (constant-limit) integrand is added back in closed form.
//! - No silent clamping: constructors validate and return typed errors.

pub mod belief;
pub mod error;
pub mod fmt;
pub mod functional;
pub mod paths;
pub mod quad;
pub mod roots;
pub mod spec;
pub mod split;
pub mod traj;
pub mod value;

pub use belief::Belief;
pub use error::GameError;
pub use fmt::format_sig9;
pub use functional::{evaluate_functional, PayoffFunctional};
pub use paths::{Flow, PathSpec};
pub use quad::{integrate, Quadrature};
pub use roots::bisect;
pub use spec::{GameSpec, PayoffSpec};
pub use split::{SignalSplit, SplitAtom, SplitLabel};
pub use traj::{EventKind, TailKind, TrajEvent, Trajectory};
pub use value::{discounted_delta_value, state_value_lower, state_value_upper};
