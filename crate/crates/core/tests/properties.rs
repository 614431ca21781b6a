use std::f64::consts::FRAC_PI_2;

use proptest::prelude::*;

use ratio_bounds::bounds::{
    a_gap, a_sequence, bernoulli_log_bound, coshcos_bound, coshcos_limit_bound, exp_envelope,
    sinhsin_bound, Family, LemmaQuery,
};
use ratio_bounds::oracle::{product_coshcos, ratio_coshcos, ratio_sinhsin};
use ratio_bounds::series::{
    lambda_sum_closed_with, lambda_sum_partial, lambda_sum_upper, lambda_sum_with_terms, log_ratio,
    partial_sum_s, SeriesConfig,
};
use ratio_bounds::verify::{verify_ratio_bounds, GridSpec};

const SLACK: f64 = 1e-12;

fn unit() -> impl Strategy<Value = f64> {
    1e-3..(1.0 - 1e-3)
}

// (x, alpha) with 0 < x < alpha <= pi/2 - 1e-3
fn pair() -> impl Strategy<Value = (f64, f64)> {
    (1e-3..(FRAC_PI_2 - 1e-3), 1e-3..(1.0 - 1e-3)).prop_map(|(alpha, t)| (alpha * t, alpha))
}

proptest! {
    #[test]
    fn partial_sums_increase_toward_half_log_ratio(a in 0.01..0.99f64, k0 in -1i32..20) {
        let s = partial_sum_s(a, k0).unwrap();
        let next = partial_sum_s(a, k0 + 1).unwrap();
        let added = a.powi(2 * k0 + 3) / f64::from(2 * k0 + 3);
        if added > 2.0 * f64::EPSILON * next {
            prop_assert!(next > s);
        } else {
            prop_assert!(next >= s);
        }
        let full = log_ratio(a).unwrap();
        prop_assert!(2.0 * next <= full * (1.0 + 4.0 * f64::EPSILON));
        // strict once the omitted tail is resolvable in binary64
        let first_omitted = 2.0 * a.powi(2 * k0 + 5) / f64::from(2 * k0 + 5);
        if first_omitted > 4.0 * f64::EPSILON * full {
            prop_assert!(2.0 * next < full);
        }
    }

    #[test]
    fn lemma_bound_dominates(u in unit(), v in unit(), k0 in -1i32..=16) {
        let q = LemmaQuery::new(u, v, k0).unwrap();
        let bound = bernoulli_log_bound(&q).unwrap();
        prop_assert!(bound - log_ratio(u * v).unwrap() >= -SLACK);
    }

    #[test]
    fn gap_identity_matches_direct_difference(u in unit(), v in unit(), k in -1i32..12) {
        let cfg = SeriesConfig::default();
        let a = a_sequence(u, v, k + 1).unwrap();
        let gap = a_gap(u, v, k, &cfg).unwrap();
        let i = (k + 1) as usize;
        prop_assert!(gap.value > 0.0);
        prop_assert!((a[i] - a[i + 1] - gap.value).abs() <= SLACK + gap.tail_bound);
    }

    #[test]
    fn coshcos_family_dominates_and_decreases((x, alpha) in pair(), k0 in -1i32..=11) {
        let reference = ratio_coshcos(x).unwrap();
        let b = coshcos_bound(x, alpha, k0).unwrap();
        let b_next = coshcos_bound(x, alpha, k0 + 1).unwrap();
        prop_assert!((b - reference) / reference >= -SLACK);
        prop_assert!((b - b_next) / b >= -SLACK);
    }

    #[test]
    fn sinhsin_family_dominates((x, alpha) in pair(), k0 in -1i32..=12) {
        let b = sinhsin_bound(x, alpha, k0).unwrap();
        let reference = ratio_sinhsin(x).unwrap();
        prop_assert!((b - reference) / reference >= -SLACK);
    }

    #[test]
    fn limit_and_envelope_dominate((x, alpha) in pair()) {
        let reference = ratio_coshcos(x).unwrap();
        prop_assert!((coshcos_limit_bound(x).unwrap() - reference) / reference >= -SLACK);
        prop_assert!((exp_envelope(x, alpha).unwrap() - reference) / reference >= -SLACK);
        prop_assert_eq!(exp_envelope(x, alpha).unwrap(), coshcos_bound(x, alpha, -1).unwrap());
    }

    #[test]
    fn nested_truncations_stay_within_tail(k in 0u32..6, n in 1usize..2000, extra in 1usize..5000) {
        let coarse = lambda_sum_with_terms(k, n);
        let fine = lambda_sum_with_terms(k, n + extra);
        prop_assert!(coarse.contains(fine.value, 4.0 * f64::EPSILON));
    }

    #[test]
    fn product_increases_with_terms(x in 1e-3..(FRAC_PI_2 - 1e-3), n in 1usize..500) {
        let a = product_coshcos(x, n).unwrap();
        let b = product_coshcos(x, n + 1).unwrap();
        prop_assert!(b.value > a.value);
        let r = ratio_coshcos(x).unwrap();
        prop_assert!(a.value <= r && r <= a.value + a.tail_bound + 4.0 * f64::EPSILON * r);
    }
}

#[test]
fn lambda_sums_consistent_and_ordered() {
    let cfg = SeriesConfig::default();
    let mut previous = f64::INFINITY;
    for k in 0..=8 {
        let closed = lambda_sum_closed_with(k, &cfg).unwrap();
        let partial = lambda_sum_partial(k, &cfg).unwrap();
        assert!(
            (closed.value - partial.value).abs()
                <= closed.tail_bound + partial.tail_bound + 4.0 * f64::EPSILON,
            "k={k}"
        );
        assert!(closed.value <= lambda_sum_upper(k));
        assert!(closed.value <= std::f64::consts::PI.powi(2) / 8.0);
        // I_k - 1 ~ 3^-(4k+2) drops below one ulp of 1 at k = 8
        if k <= 7 {
            assert!(closed.value < previous && closed.value > 1.0, "k={k}");
        } else {
            assert!(closed.value <= previous && closed.value >= 1.0);
        }
        previous = closed.value;
    }
}

#[test]
fn ratios_strictly_increase_on_grid() {
    let n = 200;
    let xs: Vec<f64> = (1..=n)
        .map(|i| FRAC_PI_2 * i as f64 / (n + 1) as f64)
        .collect();
    for w in xs.windows(2) {
        assert!(ratio_coshcos(w[1]).unwrap() > ratio_coshcos(w[0]).unwrap());
        assert!(ratio_sinhsin(w[1]).unwrap() > ratio_sinhsin(w[0]).unwrap());
    }
}

#[test]
fn reports_are_deterministic() {
    let grid = GridSpec::new(12, 1e-3, vec![-1, 0, 3]).unwrap();
    let a = verify_ratio_bounds(&grid, Family::CoshCos, SLACK);
    let b = verify_ratio_bounds(&grid, Family::CoshCos, SLACK);
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
    assert!(a.passed && a.worst_margin >= -SLACK);
}
