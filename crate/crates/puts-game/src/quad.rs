//! Adaptive Gauss–Kronrod quadrature.
//!
//! A single numerical integrator serves the whole workspace: 15-point
//! Kronrod with embedded 7-point Gauss error estimation, refined by
//! interval bisection on a worst-first queue until the summed error
//! estimate meets the requested absolute tolerance.

use crate::error::GameError;

/// Result of an adaptive quadrature: the integral value, the summed
/// error estimate over accepted segments, and the number of integrand
/// evaluations performed.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Kronrod abscissae for the 15-point rule (positive half; symmetric).
const XGK15: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

/// Gauss weights for the embedded 7-point rule (odd Kronrod indices).
const WG7: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Kronrod weights for the 15-point rule.
const WGK15: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Maximum number of segment bisections before reporting non-convergence.
const MAX_SEGMENTS: usize = 4096;

/// One 15-point Kronrod evaluation on `[a, b]`, returning the Kronrod
/// value and the |K15 - G7| error estimate.
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let f_center = f(center);
    let mut kronrod = f_center * WGK15[7];
    let mut gauss = f_center * WG7[3];

    for j in 0..7 {
        let x = half * XGK15[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        let fsum = f1 + f2;
        kronrod += WGK15[j] * fsum;
        if j % 2 == 1 {
            // XGK15 indices 1, 3, 5 are the Gauss-7 abscissae (plus center).
            gauss += WG7[j / 2] * fsum;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Adaptive quadrature of `f` over `[a, b]` to absolute tolerance
/// `abs_tol`, by worst-first interval bisection of the 15-point
/// Gauss–Kronrod rule.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
) -> Result<Quadrature, GameError> {
    if !a.is_finite() || !b.is_finite() {
        return Err(GameError::domain(format!(
            "integration bounds must be finite, got [{a}, {b}]"
        )));
    }
    if !(abs_tol.is_finite() && abs_tol > 0.0) {
        return Err(GameError::domain(format!(
            "quadrature tolerance must be positive, got {abs_tol}"
        )));
    }
    if a == b {
        return Ok(Quadrature {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };

    // Segments kept as (neg_error, lo, hi, value, error) in a max-by-error
    // vector; a simple linear scan for the worst segment is plenty at the
    // segment counts we ever reach.
    let (v0, e0) = qk15(&f, lo, hi);
    let mut evals = 15usize;
    let mut segments: Vec<(f64, f64, f64, f64)> = vec![(lo, hi, v0, e0)];
    let mut total_err: f64 = e0;

    while total_err > abs_tol {
        if segments.len() >= MAX_SEGMENTS {
            return Err(GameError::non_convergence(format!(
                "quadrature did not reach tolerance {abs_tol}: residual {total_err} after {} segments",
                segments.len()
            )));
        }
        // Split the segment with the largest error estimate.
        let (worst_idx, _) = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.partial_cmp(&y.1 .3).unwrap())
            .expect("segment list is never empty");
        let (s_lo, s_hi, _s_val, s_err) = segments.swap_remove(worst_idx);
        total_err -= s_err;
        let mid = 0.5 * (s_lo + s_hi);
        if mid <= s_lo || mid >= s_hi {
            return Err(GameError::non_convergence(format!(
                "quadrature segment [{s_lo}, {s_hi}] cannot be split further; residual {total_err}"
            )));
        }
        let (v_l, e_l) = qk15(&f, s_lo, mid);
        let (v_r, e_r) = qk15(&f, mid, s_hi);
        evals += 30;
        segments.push((s_lo, mid, v_l, e_l));
        segments.push((mid, s_hi, v_r, e_r));
        total_err += e_l + e_r;
    }

    let value: f64 = segments.iter().map(|s| s.2).sum();
    Ok(Quadrature {
        value: sign * value,
        error_estimate: total_err,
        evaluations: evals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn exact_on_polynomials() {
        // K15 integrates low-degree polynomials exactly; subdivision never
        // triggers.
        let q = integrate(|x| 3.0 * x * x, 0.0, 2.0, 1e-12).unwrap();
        assert_abs_diff_eq!(q.value, 8.0, epsilon = 1e-12);
        assert_eq!(q.evaluations, 15);
    }

    #[test]
    fn discounted_exponential_integral() {
        // ∫_0^20 e^{-t} dt = 1 - e^{-20}.
        let q = integrate(|t| (-t).exp(), 0.0, 20.0, 1e-12).unwrap();
        assert_abs_diff_eq!(q.value, 1.0 - (-20.0f64).exp(), epsilon = 1e-11);
    }

    #[test]
    fn oscillatory_integrand_subdivides_and_converges() {
        // ∫_0^π sin(31x) dx = (1 - cos(31π)) / 31 = 2/31.
        let q = integrate(|x| (31.0 * x).sin(), 0.0, std::f64::consts::PI, 1e-11).unwrap();
        assert_abs_diff_eq!(q.value, 2.0 / 31.0, epsilon = 1e-10);
        assert!(q.evaluations > 15);
    }

    #[test]
    fn kinked_integrand_converges() {
        // ∫_{-1}^{1} |x| dx = 1; the kink forces adaptive refinement.
        let q = integrate(|x: f64| x.abs(), -1.0, 1.0, 1e-11).unwrap();
        assert_abs_diff_eq!(q.value, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn reversed_bounds_flip_sign() {
        let fwd = integrate(|x| x, 0.0, 1.0, 1e-12).unwrap();
        let rev = integrate(|x| x, 1.0, 0.0, 1e-12).unwrap();
        assert_abs_diff_eq!(fwd.value, -rev.value, epsilon = 1e-15);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(integrate(|x| x, 0.0, f64::INFINITY, 1e-10).is_err());
        assert!(integrate(|x| x, 0.0, 1.0, 0.0).is_err());
        assert!(integrate(|x| x, 0.0, 1.0, -1e-10).is_err());
    }

    #[test]
    fn empty_interval_is_zero() {
        let q = integrate(|x| x, 2.0, 2.0, 1e-12).unwrap();
        assert_eq!(q.value, 0.0);
        assert_eq!(q.evaluations, 0);
    }
}
