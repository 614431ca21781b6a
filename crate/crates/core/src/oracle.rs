//! Reference values for the ratio functions.
//!
//! Direct evaluation of `cosh x / cos x` and `sinh x / sin x`, accurate
//! logarithms of both ratios, and truncations of the infinite product
//! `cosh x / cos x = prod_n (1 + w_n) / (1 - w_n)` with
//! `w_n = 4x^2 / (pi^2 (2n-1)^2)`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{open_interval, Error, Result};
use crate::series::{log_ratio_unchecked, CompensatedSum, TruncatedValue};

/// Below this argument `sinh x / sin x` uses its even Taylor expansion.
pub const SINHSIN_TAYLOR_CUTOFF: f64 = 1e-4;

pub(crate) fn check_half_pi(name: &'static str, x: f64) -> Result<()> {
    open_interval(name, x, 0.0, FRAC_PI_2, "(0, pi/2)")
}

pub fn ratio_coshcos(x: f64) -> Result<f64> {
    check_half_pi("x", x)?;
    Ok(x.cosh() / x.cos())
}

pub fn ratio_sinhsin(x: f64) -> Result<f64> {
    check_half_pi("x", x)?;
    Ok(ratio_sinhsin_unchecked(x))
}

pub(crate) fn ratio_sinhsin_unchecked(x: f64) -> f64 {
    if x < SINHSIN_TAYLOR_CUTOFF {
        // 1 + x^2/3 + x^4/18 + 13x^6/1890 + 17x^8/22680 + 97x^10/1247400
        let z = x * x;
        let poly = 97.0 / 1_247_400.0;
        let poly = poly * z + 17.0 / 22_680.0;
        let poly = poly * z + 13.0 / 1_890.0;
        let poly = poly * z + 1.0 / 18.0;
        let poly = poly * z + 1.0 / 3.0;
        1.0 + poly * z
    } else {
        x.sinh() / x.sin()
    }
}

/// `cosh x - cos x = 2 sum_j x^(4j+2) / (4j+2)!`, summed without cancellation.
fn cosh_minus_cos(x: f64) -> f64 {
    hyperbolic_minus_circular(x, 2)
}

/// `sinh x - sin x = 2 sum_j x^(4j+3) / (4j+3)!`.
fn sinh_minus_sin(x: f64) -> f64 {
    hyperbolic_minus_circular(x, 3)
}

// 2 * sum_{j>=0} x^(4j+r) / (4j+r)!, all terms positive.
fn hyperbolic_minus_circular(x: f64, r: u32) -> f64 {
    let x4 = x.powi(4);
    let mut term = x.powi(r as i32) / (1..=r).map(f64::from).product::<f64>();
    let mut acc = CompensatedSum::new();
    let mut j = 0u32;
    while term > 0.0 {
        acc.add(term);
        if term < acc.value() * f64::EPSILON * 1e-3 {
            break;
        }
        let base = 4 * j + r;
        let denom: f64 = (base + 1..=base + 4).map(f64::from).product();
        term *= x4 / denom;
        j += 1;
    }
    2.0 * acc.value()
}

/// `ln(cosh x / cos x)`, accurate to a few ulps relative even as `x -> 0`.
pub fn ln_ratio_coshcos(x: f64) -> Result<f64> {
    check_half_pi("x", x)?;
    Ok(ln_ratio_coshcos_unchecked(x))
}

pub(crate) fn ln_ratio_coshcos_unchecked(x: f64) -> f64 {
    (cosh_minus_cos(x) / x.cos()).ln_1p()
}

/// `ln(sinh x / sin x)`, accurate to a few ulps relative even as `x -> 0`.
pub fn ln_ratio_sinhsin(x: f64) -> Result<f64> {
    check_half_pi("x", x)?;
    Ok(ln_ratio_sinhsin_unchecked(x))
}

pub(crate) fn ln_ratio_sinhsin_unchecked(x: f64) -> f64 {
    (sinh_minus_sin(x) / x.sin()).ln_1p()
}

struct ProductParts {
    partial: f64,
    // rigorous bracket on the log of the omitted factors
    tail_lo: f64,
    tail_hi: f64,
}

fn product_parts(x: f64, n_terms: usize) -> Result<ProductParts> {
    check_half_pi("x", x)?;
    if n_terms == 0 {
        return Err(Error::Domain {
            name: "n_terms",
            value: 0.0,
            domain: "n_terms >= 1",
        });
    }
    let scale = 4.0 * x * x / (PI * PI);
    let w = |n: usize| {
        let d = (2 * n - 1) as f64;
        scale / (d * d)
    };
    let log_sum: CompensatedSum = (1..=n_terms).rev().map(|n| log_ratio_unchecked(w(n))).sum();

    // sum_{n>N} (2n-1)^-2 lies in [1/(4(N+1)-2) + f(N+1)/2, 1/(4N)]
    // (integral comparison for the convex summand); each omitted
    // log_ratio(w_n) lies between 2 w_n and c w_n, c = log_ratio(w)/w at n = N+1.
    let n = n_terms as f64;
    let f_next = 1.0 / ((2.0 * n + 1.0) * (2.0 * n + 1.0));
    let odd_tail_lo = 1.0 / (4.0 * n + 2.0) + 0.5 * f_next;
    let odd_tail_hi = 1.0 / (4.0 * n);
    let w_next = w(n_terms + 1);
    let c = log_ratio_unchecked(w_next) / w_next;
    Ok(ProductParts {
        partial: log_sum.value().exp(),
        tail_lo: 2.0 * scale * odd_tail_lo,
        tail_hi: c * scale * odd_tail_hi,
    })
}

/// Partial product over `n = 1..=n_terms`.
///
/// Every factor exceeds 1, so the partial product is a lower bound and
/// `value <= cosh x / cos x <= value + tail_bound`.
pub fn product_coshcos(x: f64, n_terms: usize) -> Result<TruncatedValue> {
    let parts = product_parts(x, n_terms)?;
    Ok(TruncatedValue {
        value: parts.partial,
        tail_bound: parts.partial * parts.tail_hi.exp_m1(),
    })
}

/// Partial product multiplied by an estimate of the omitted factors.
///
/// The omitted factors multiply to `exp(L)` with `L` in a rigorous bracket
/// `[lo, hi]`; the value uses `L = (lo + hi)/2` and `tail_bound` covers the
/// rest of the bracket.
pub fn product_coshcos_corrected(x: f64, n_terms: usize) -> Result<TruncatedValue> {
    let parts = product_parts(x, n_terms)?;
    let mid = parts.partial * (0.5 * (parts.tail_lo + parts.tail_hi)).exp();
    let half_width = (0.5 * (parts.tail_hi - parts.tail_lo)).max(0.0);
    Ok(TruncatedValue {
        value: mid,
        tail_bound: mid * half_width.exp_m1(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ulps(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs() / f64::EPSILON
    }

    #[test]
    fn ratio_values() {
        // extended precision references
        assert!(ulps(ratio_coshcos(0.5).unwrap(), 1.284_922_939_646_154_2) <= 4.0);
        assert!(ulps(ratio_coshcos(1.0).unwrap(), 2.855_957_892_565_114) <= 4.0);
        assert!(ulps(ratio_sinhsin(0.5).unwrap(), 1.086_916_034_992_34) <= 4.0);
        assert!(ulps(ratio_sinhsin(1.0).unwrap(), 1.396_603_346_830_899_7) <= 4.0);
    }

    #[test]
    fn small_arguments_tend_to_one() {
        for x in [1e-3, 1e-5, 1e-9, 1e-200] {
            assert!((ratio_coshcos(x).unwrap() - 1.0).abs() <= 2.0 * x * x + 1e-16);
            assert!((ratio_sinhsin(x).unwrap() - 1.0).abs() <= x * x + 1e-16);
        }
    }

    #[test]
    fn taylor_branch_is_continuous() {
        let below = ratio_sinhsin(SINHSIN_TAYLOR_CUTOFF * (1.0 - 1e-12)).unwrap();
        let above = ratio_sinhsin(SINHSIN_TAYLOR_CUTOFF).unwrap();
        assert!(ulps(below, above) <= 4.0);
    }

    #[test]
    fn domain_is_open() {
        for x in [0.0, FRAC_PI_2, -0.1, 2.0, f64::NAN] {
            assert!(ratio_coshcos(x).is_err());
            assert!(ratio_sinhsin(x).is_err());
        }
        assert!(product_coshcos(0.5, 0).is_err());
    }

    #[test]
    fn log_ratios_are_accurate_near_zero() {
        // leading terms: x^2 and x^2/3, next corrections O(x^6)
        let x = 1e-5;
        assert!(ulps(ln_ratio_coshcos(x).unwrap(), x * x) <= 4.0);
        assert!(ulps(ln_ratio_sinhsin(x).unwrap(), x * x / 3.0) <= 4.0);
        assert!(
            ulps(
                ln_ratio_coshcos(1.0).unwrap(),
                2.855_957_892_565_114_f64.ln()
            ) <= 4.0
        );
    }

    #[test]
    fn product_examples() {
        let one = product_coshcos(0.5, 1).unwrap();
        assert!((one.value - 1.225_489_199_919_036).abs() < 1e-15);
        let three = product_coshcos(0.5, 3).unwrap();
        assert!((three.value - 1.263_597_258_192_661_4).abs() < 1e-15);
        assert!(three.value < ratio_coshcos(0.5).unwrap());
        assert!(three.value + three.tail_bound >= ratio_coshcos(0.5).unwrap());
    }
}
