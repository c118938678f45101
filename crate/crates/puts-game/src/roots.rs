//! Bisection root finding.
//!
//! All threshold solves in the workspace are roots of monotone scalar
//! functions on known brackets, so plain bisection with a guaranteed
//! bracket is the right tool: it is unconditionally convergent and its
//! accuracy is set purely by the requested interval tolerance.

use crate::error::GameError;

/// Default interval tolerance for threshold solves.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Find a root of `f` on `[lo, hi]` by bisection to interval width `tol`.
///
/// Requires `f(lo)` and `f(hi)` to have opposite signs (a zero at either
/// endpoint is returned immediately). Returns the bracket midpoint once
/// the bracket is narrower than `tol`.
pub fn bisect<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<f64, GameError> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(GameError::domain(format!(
            "bisection bracket must be finite with lo < hi, got [{lo}, {hi}]"
        )));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(GameError::domain(format!(
            "bisection tolerance must be positive, got {tol}"
        )));
    }
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(GameError::domain(format!(
            "bisection requires a sign change: f({lo}) = {f_lo}, f({hi}) = {f_hi}"
        )));
    }
    let mut a = lo;
    let mut b = hi;
    let mut f_a = f_lo;
    for _ in 0..max_iter {
        let mid = 0.5 * (a + b);
        if b - a < tol || mid <= a || mid >= b {
            return Ok(mid);
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_a.signum() {
            a = mid;
            f_a = f_mid;
        } else {
            b = mid;
        }
    }
    Err(GameError::non_convergence(format!(
        "bisection did not reach width {tol} within {max_iter} iterations; bracket [{a}, {b}]"
    )))
}
