//! Deterministic numeric formatting.
//!
//! All file and report output in the workspace prints floating-point
//! numbers through [`format_sig9`]: nine significant digits, trailing
//! zeros trimmed, fixed-point notation for moderate magnitudes and
//! scientific notation otherwise. The mapping from `f64` to text is a pure
//! function of the value, so byte-identical inputs produce byte-identical
//! files on every platform.

/// Format a float with nine significant digits.
///
/// Rules (mirroring `%g`-style output with precision 9):
/// - `NaN`/infinities print as `nan`, `inf`, `-inf`;
/// - zero prints as `0`;
/// - values with decimal exponent `e10` in `[-4, 8]` print fixed-point
///   with `8 - e10` decimals, trailing zeros (and a bare point) trimmed;
/// - everything else prints as scientific `m.ffffffffe±EE` with the
///   mantissa trimmed the same way.
pub fn format_sig9(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }

    let magnitude = x.abs();
    // Decimal exponent of the leading significant digit after rounding to
    // nine significant digits. Rounding can bump the exponent (e.g.
    // 0.9999999996 → 1.0), so compute it from the rounded string.
    let sci = format!("{magnitude:.8e}");
    let (_, exp_str) = sci.split_once('e').expect("scientific format has exponent");
    let e10: i32 = exp_str.parse().expect("valid exponent");

    if (-4..9).contains(&e10) {
        let decimals = (8 - e10).max(0) as usize;
        trim_trailing(&format!("{x:.decimals$}"))
    } else {
        // Scientific: mantissa rounded to 9 significant digits.
        let s = format!("{x:.8e}");
        let (mantissa, exp_str) = s.split_once('e').expect("scientific format has exponent");
        let exp: i32 = exp_str.parse().expect("valid exponent");
        format!("{}e{}", trim_trailing(mantissa), exp)
    }
}

fn trim_trailing(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0');
    t.trim_end_matches('.').to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point_cases() {
        assert_eq!(format_sig9(1.0 / 3.0), "0.333333333");
        assert_eq!(format_sig9(0.05392), "0.05392");
        assert_eq!(format_sig9(1.0), "1");
        assert_eq!(format_sig9(-2.5), "-2.5");
        assert_eq!(format_sig9(0.0), "0");
        assert_eq!(format_sig9(1.0 / 60.0), "0.0166666667");
        assert_eq!(format_sig9(123456789.0), "123456789");
    }

    #[test]
    fn scientific_cases() {
        assert_eq!(format_sig9(1e-10), "1e-10");
        assert_eq!(format_sig9(1.20178041543e-10), "1.20178042e-10");
        assert_eq!(format_sig9(3.5e12), "3.5e12");
        assert_eq!(format_sig9(-4.2e-7), "-4.2e-7");
    }

    #[test]
    fn boundary_magnitudes() {
        // e10 = -4 is still fixed; e10 = -5 flips to scientific.
        assert_eq!(format_sig9(1.5e-4), "0.00015");
        assert_eq!(format_sig9(1.5e-5), "1.5e-5");
        // e10 = 8 fixed; e10 = 9 scientific.
        assert_eq!(format_sig9(9.99e8), "999000000");
        assert_eq!(format_sig9(1e9), "1e9");
    }

    #[test]
    fn non_finite_values() {
        assert_eq!(format_sig9(f64::NAN), "nan");
        assert_eq!(format_sig9(f64::INFINITY), "inf");
        assert_eq!(format_sig9(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn rounding_carries_exponent() {
        // 0.99999999951 rounds (9 sig digits) to 1.
        assert_eq!(format_sig9(0.999_999_999_51), "1");
        assert_eq!(format_sig9(9.999_999_996e8), "1e9");
    }

    #[test]
    fn deterministic_across_calls() {
        let vals = [0.1, -0.25, 1.0 / 7.0, 2.0f64.sqrt(), 6.02e23, 1.6e-19];
        for v in vals {
            assert_eq!(format_sig9(v), format_sig9(v));
        }
    }
}
