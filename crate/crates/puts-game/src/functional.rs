//! Designer payoff functionals on trajectories.
//!
//! A [`PayoffFunctional`] maps a recorded [`Trajectory`] to a scalar. The
//! discounted-mean functional `φ(A) = ∫_0^∞ e^{-r t} A_t dt` is evaluated
//! exactly: each inter-event segment has exponential aggregate play, whose
//! discounted integral is in closed form, and the tail beyond the recorded
//! horizon is added analytically according to the trajectory's
//! [`TailKind`].

use std::sync::Arc;

use crate::error::GameError;
use crate::traj::{TailKind, Trajectory};

/// A designer objective evaluated on recorded trajectories.
#[derive(Clone)]
pub enum PayoffFunctional {
    /// `∫_0^∞ e^{-rate·t} A_t dt` — the discounted mean of aggregate play.
    DiscountedMean { rate: f64 },
    /// Aggregate play at the recorded horizon.
    TerminalLevel,
    /// An arbitrary user-supplied functional.
    UserSupplied(Arc<dyn Fn(&Trajectory) -> f64 + Send + Sync>),
}

impl std::fmt::Debug for PayoffFunctional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PayoffFunctional::DiscountedMean { rate } => {
                write!(f, "DiscountedMean {{ rate: {rate} }}")
            }
            PayoffFunctional::TerminalLevel => write!(f, "TerminalLevel"),
            PayoffFunctional::UserSupplied(_) => write!(f, "UserSupplied(..)"),
        }
    }
}

impl PayoffFunctional {
    /// Discounted mean with a validated positive rate.
    pub fn discounted_mean(rate: f64) -> Result<Self, GameError> {
        if !(rate.is_finite() && rate > 0.0) {
            return Err(GameError::domain(format!(
                "discount rate must be positive, got {rate}"
            )));
        }
        Ok(PayoffFunctional::DiscountedMean { rate })
    }
}

/// Discounted integral `∫_{t0}^{t1} e^{-r t} A_t dt` for a segment on which
/// `A` relaxes exponentially from `a0` (at `t0`) toward `a_inf` at rate
/// `k ≥ 0` (frozen when `k = 0`).
fn segment_integral(r: f64, t0: f64, t1: f64, a0: f64, a_inf: f64, k: f64) -> f64 {
    debug_assert!(t1 >= t0);
    let d0 = (-r * t0).exp();
    if k == 0.0 {
        return a0 * d0 * (1.0 - (-r * (t1 - t0)).exp()) / r;
    }
    let dt = t1 - t0;
    let const_part = a_inf * d0 * (1.0 - (-r * dt).exp()) / r;
    let trans_part = (a0 - a_inf) * d0 * (1.0 - (-(r + k) * dt).exp()) / (r + k);
    const_part + trans_part
}

/// Closed-form tail `∫_T^∞ e^{-r t} A_t dt` for the flow regime beyond the
/// horizon, starting from play `a_t` at time `T`.
fn tail_integral(r: f64, lambda: f64, horizon: f64, a_t: f64, tail: TailKind) -> f64 {
    let d = (-r * horizon).exp();
    match tail {
        // A_t = 1 - (1 - a_T) e^{-λ(t-T)}.
        TailKind::UpperFlow => d * (1.0 / r - (1.0 - a_t) / (r + lambda)),
        // A_t = a_T e^{-λ(t-T)}.
        TailKind::LowerFlow => d * a_t / (r + lambda),
        // A_t = a_T.
        TailKind::Freeze => d * a_t / r,
    }
}

/// Evaluate a payoff functional on a trajectory.
pub fn evaluate_functional(
    functional: &PayoffFunctional,
    traj: &Trajectory,
) -> Result<f64, GameError> {
    match functional {
        PayoffFunctional::TerminalLevel => Ok(traj.final_play()),
        PayoffFunctional::UserSupplied(f) => Ok(f(traj)),
        PayoffFunctional::DiscountedMean { rate } => {
            let r = *rate;
            if !(r.is_finite() && r > 0.0) {
                return Err(GameError::domain(format!(
                    "discount rate must be positive, got {r}"
                )));
            }
            let lambda = traj.switch_rate;
            let mut total = 0.0;
            for i in 0..traj.events.len() {
                let e = &traj.events[i];
                let t_next = if i + 1 < traj.events.len() {
                    traj.events[i + 1].t
                } else {
                    traj.horizon
                };
                if t_next <= e.t {
                    continue;
                }
                let flow = e.flow_after;
                match flow.target() {
                    None => {
                        total += segment_integral(r, e.t, t_next, e.play, e.play, 0.0);
                    }
                    Some(a_inf) => {
                        total += segment_integral(
                            r,
                            e.t,
                            t_next,
                            e.play,
                            a_inf,
                            flow.rate(lambda),
                        );
                    }
                }
            }
            total += tail_integral(r, lambda, traj.horizon, traj.final_play(), traj.tail);
            Ok(total)
        }
    }
}

/// Value of the discounted-mean functional along the all-up path from
/// `a0` at time 0: `∫_0^∞ e^{-rt} Ā_t dt = 1/r - (1 - a0)/(r + λ)`.
pub fn upper_path_value(rate: f64, switch_rate: f64, a0: f64) -> f64 {
    1.0 / rate - (1.0 - a0) / (rate + switch_rate)
}

/// Value of the discounted-mean functional along the all-down path from
/// `a0` at time 0: `∫_0^∞ e^{-rt} A̲_t dt = a0/(r + λ)`.
pub fn lower_path_value(rate: f64, switch_rate: f64, a0: f64) -> f64 {
    a0 / (rate + switch_rate)
}
