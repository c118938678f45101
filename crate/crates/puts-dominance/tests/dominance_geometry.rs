//! Integration tests for dominance geometry.
//!
//! Pins the benchmark-game thresholds, constants, and escape numbers, and
//! property-tests the structural invariants (threshold ordering and
//! monotonicity, escape-probability range, split feasibility) over random
//! affine games.

use approx::assert_abs_diff_eq;
use proptest::prelude::*;

use puts_dominance::{
    belief_direction, escape_probability, escape_split, lower_dominance_threshold,
    upper_dominance_threshold, DominanceThresholds, GameConstants,
};
use puts_game::{Belief, GameSpec};

// ═══════════════════════════════════════════════════════════════════════
// Pinned benchmark numbers
// ═══════════════════════════════════════════════════════════════════════

#[test]
fn benchmark_thresholds_on_dense_grid() {
    let g = GameSpec::canonical();
    let t = DominanceThresholds::build(&g, 200).unwrap();
    for (a, ld, ud) in t.to_rows() {
        assert_abs_diff_eq!(ld, (1.0 - a) / 3.0, epsilon = 1e-8);
        assert_abs_diff_eq!(ud, 0.5 - a / 3.0, epsilon = 1e-8);
    }
    // ψ_LD: 1/3 at A = 0, 0 at A = 1; ψ_UD: 1/2 at A = 0, 1/6 at A = 1.
    assert_abs_diff_eq!(lower_dominance_threshold(&g, 0.0).unwrap(), 1.0 / 3.0, epsilon = 1e-9);
    assert_abs_diff_eq!(lower_dominance_threshold(&g, 1.0).unwrap(), 0.0, epsilon = 1e-9);
    assert_abs_diff_eq!(upper_dominance_threshold(&g, 0.0).unwrap(), 0.5, epsilon = 1e-9);
    assert_abs_diff_eq!(upper_dominance_threshold(&g, 1.0).unwrap(), 1.0 / 6.0, epsilon = 1e-9);
    assert_abs_diff_eq!(t.initial_radius(), 1.0 / 6.0, epsilon = 1e-8);
}

#[test]
fn benchmark_constants() {
    let g = GameSpec::canonical();
    let c = GameConstants::compute(&g, 256, 1.0).unwrap();
    assert_abs_diff_eq!(c.l_psi, 1.0 / 3.0, epsilon = 1e-8);
    assert_abs_diff_eq!(c.overshoot, 2.0 / 3.0, epsilon = 1e-8);
    assert_abs_diff_eq!(c.value_floor, 2.0 / 3.0, epsilon = 1e-8);
    assert_abs_diff_eq!(c.delta_bar, 1.0, epsilon = 1e-8);
}

#[test]
fn benchmark_escape() {
    let g = GameSpec::canonical();
    let b = Belief::binary(0.1).unwrap();
    assert_abs_diff_eq!(escape_probability(&g, &b, 0.0).unwrap(), 0.3, epsilon = 1e-9);
    let split = escape_split(&g, &b, 0.0, 0.01).unwrap();
    assert_abs_diff_eq!(split.atoms()[0].posterior.weight(1), 0.34482758620689657, epsilon = 1e-9);
}

#[test]
fn thresholds_serialize_round_trip() {
    let g = GameSpec::canonical();
    let t = DominanceThresholds::build(&g, 17).unwrap();
    let json = serde_json::to_string(&t).unwrap();
    let back: DominanceThresholds = serde_json::from_str(&json).unwrap();
    assert_eq!(t.psi_ld_table(), back.psi_ld_table());
    assert_eq!(t.psi_ud_table(), back.psi_ud_table());
}

// ═══════════════════════════════════════════════════════════════════════
// Property tests over random affine binary games
// ═══════════════════════════════════════════════════════════════════════

/// Strategy: random affine binary games with action 1 dominant in state 1.
fn arbitrary_game() -> impl Strategy<Value = GameSpec> {
    (
        0.2..=3.0f64,  // play slope
        -3.0..=-0.1f64, // state-0 offset (bad state)
        0.05..=3.0f64, // state-1 offset (dominance at A = 0 requires > 0)
        0.3..=3.0f64,  // discount rate
        0.3..=3.0f64,  // switch rate
    )
        .prop_map(|(slope, off0, off1, r, lam)| {
            GameSpec::affine_binary(slope, off0, off1, r, lam).expect("valid game")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Thresholds are ordered (ψ_LD ≤ ψ_UD), lie in [0, 1], and are
    /// non-increasing in A.
    #[test]
    fn thresholds_ordered_and_monotone(g in arbitrary_game()) {
        let t = DominanceThresholds::build(&g, 65).unwrap();
        let rows = t.to_rows();
        for (_, ld, ud) in &rows {
            prop_assert!(*ld >= 0.0 && *ld <= 1.0);
            prop_assert!(*ud >= 0.0 && *ud <= 1.0);
            prop_assert!(ud >= &(ld - 1e-9));
        }
        for w in rows.windows(2) {
            prop_assert!(w[1].1 <= w[0].1 + 1e-9);
            prop_assert!(w[1].2 <= w[0].2 + 1e-9);
        }
    }

    /// Escape probability lies in [0, 1]; it is 1 outside the region and
    /// scales linearly with the dominant weight inside (binary games).
    #[test]
    fn escape_probability_range_and_linearity(
        g in arbitrary_game(),
        mu in 0.0..=1.0f64,
        a in 0.0..=1.0f64,
    ) {
        let b = Belief::binary(mu).unwrap();
        let p = escape_probability(&g, &b, a).unwrap();
        prop_assert!((0.0..=1.0).contains(&p));
        let psi = lower_dominance_threshold(&g, a).unwrap();
        if mu >= psi {
            prop_assert!((p - 1.0).abs() < 1e-12 || mu == 0.0);
        } else if psi > 0.0 && mu > 0.0 {
            prop_assert!((p - mu / psi).abs() < 1e-6);
        }
    }

    /// Escape splits are Bayes-plausible with exact probabilities and the
    /// escape posterior lands weakly outside the region.
    #[test]
    fn escape_split_feasible(
        g in arbitrary_game(),
        frac in 0.05..=0.9f64,
        a in 0.0..=1.0f64,
    ) {
        let psi = lower_dominance_threshold(&g, a).unwrap();
        prop_assume!(psi > 0.02);
        let mu = frac * psi;
        prop_assume!(mu > 1e-4);
        let b = Belief::binary(mu).unwrap();
        let p_star = escape_probability(&g, &b, a).unwrap();
        let eta = (0.5 * p_star).min(0.01);
        prop_assume!(eta > 1e-9 && eta < p_star);
        let split = escape_split(&g, &b, a, eta).unwrap();
        prop_assert!(split.martingale_residual(&b) <= 1e-12);
        let up = &split.atoms()[0].posterior;
        let v = puts_game::discounted_delta_value(&g, up, a).unwrap();
        prop_assert!(v >= -1e-9);
        // Binary residual posterior is the zero vertex.
        prop_assert!(split.atoms()[1].posterior.weight(1).abs() <= 1e-12);
    }

    /// The belief direction always has +1 on the dominant coordinate and
    /// total mass zero.
    #[test]
    fn direction_normalization(
        w0 in 0.01..=0.98f64,
        w1 in 0.01..=0.98f64,
    ) {
        prop_assume!(w0 + w1 < 0.995);
        let w2 = 1.0 - w0 - w1;
        let b = Belief::new(vec![w0, w1, w2]).unwrap();
        let d = belief_direction(&b, 1).unwrap();
        prop_assert!((d[1] - 1.0).abs() < 1e-12);
        let total: f64 = d.iter().sum();
        prop_assert!(total.abs() < 1e-9);
        prop_assert!(d[0] <= 0.0 && d[2] <= 0.0);
    }

    /// Constants are internally consistent on random games:
    /// derived quantities match their defining formulas and δ̄ ∈ (0, 1].
    #[test]
    fn constants_consistency(g in arbitrary_game()) {
        let c = GameConstants::compute(&g, 64, 1.0).unwrap();
        prop_assert!(c.l_play > 0.0);
        prop_assert!(c.l_belief > 0.0);
        prop_assert!((c.l_psi - c.l_play / c.l_belief).abs() < 1e-12);
        prop_assert!((c.overshoot - 2.0 * c.l_psi).abs() < 1e-12);
        prop_assert!(c.delta_bar > 0.0 && c.delta_bar <= 1.0);
        let lam = g.switch_rate();
        prop_assert!((c.rate_upper - lam * c.value_floor / (4.0 * c.l_play)).abs() < 1e-12);
        prop_assert!(
            (c.rate_lower - lam * c.value_floor / (4.0 * c.l_play * (1.0 + c.overshoot))).abs()
                < 1e-12
        );
        prop_assert!((c.rate_aux - 2.0 * c.rate_upper).abs() < 1e-12);
    }
}
