//! Upper bounds for the ratio functions.
//!
//! Three layers, all reducing to the same template at refinement level
//! `k0 = -1` (the empty correction sum):
//!
//! * the Bernoulli-type bound on `ln((1+uv)/(1-uv))` and its level sequence
//!   `a_k`, including the closed form of the gap `a_k - a_{k+1}`;
//! * the cosh/cos family `b_{k0}` and the sinh/sin family, both obtained by
//!   applying the Bernoulli-type bound factor by factor to the infinite
//!   product expansions;
//! * the limit bound `((pi^2+4x^2)/(pi^2-4x^2))^(pi^2/8)` and the best
//!   exponential envelope `exp(beta x^2)`.
//!
//! Powers are built by repeated multiplication so that every term of a sum
//! uses consistently rounded powers, and each bound is exponentiated once
//! from a compensated log-scale sum.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{open_interval, refinement_level, Error, Result};
use crate::oracle::{
    check_half_pi, ln_ratio_coshcos_unchecked, ln_ratio_sinhsin_unchecked, ratio_coshcos,
    ratio_sinhsin_unchecked,
};
use crate::series::{
    lambda_closed_cached, lambda_sum_partial, log_ratio_unchecked, partial_sum_s_unchecked,
    zeta_4k2, CompensatedSum, SeriesConfig, TruncatedValue,
};

/// A point `(u, v, k0)` for the Bernoulli-type bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LemmaQuery {
    pub u: f64,
    pub v: f64,
    pub k0: i32,
}

impl LemmaQuery {
    pub fn new(u: f64, v: f64, k0: i32) -> Result<Self> {
        let q = Self { u, v, k0 };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        open_interval("u", self.u, 0.0, 1.0, "(0, 1)")?;
        open_interval("v", self.v, 0.0, 1.0, "(0, 1)")?;
        refinement_level(self.k0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    CoshCos,
    SinhSin,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::CoshCos => "coshcos",
            Family::SinhSin => "sinhsin",
        }
    }

    /// The function being bounded, at `x` in (0, pi/2).
    pub fn reference(self, x: f64) -> Result<f64> {
        match self {
            Family::CoshCos => ratio_coshcos(x),
            Family::SinhSin => {
                check_half_pi("x", x)?;
                Ok(ratio_sinhsin_unchecked(x))
            }
        }
    }
}

/// A point `(x, alpha, k0)` for one of the ratio families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioQuery {
    pub x: f64,
    pub alpha: f64,
    pub k0: i32,
    pub family: Family,
}

impl RatioQuery {
    pub fn new(x: f64, alpha: f64, k0: i32, family: Family) -> Result<Self> {
        let q = Self {
            x,
            alpha,
            k0,
            family,
        };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        check_pair(self.x, self.alpha)?;
        refinement_level(self.k0)
    }

    pub fn bound(&self) -> Result<f64> {
        match self.family {
            Family::CoshCos => coshcos_bound(self.x, self.alpha, self.k0),
            Family::SinhSin => sinhsin_bound(self.x, self.alpha, self.k0),
        }
    }

    pub fn evaluate(&self) -> Result<EvalResult> {
        let bound = self.bound()?;
        Ok(EvalResult::against(bound, self.family.reference(self.x)?))
    }
}

/// A bound paired with the quantity it bounds.
///
/// `reference` and `margin` are absent for quantities that have no
/// reference value (the best constant, the `I_k` sums).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub bound: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reference: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub margin: Option<f64>,
}

impl EvalResult {
    pub fn against(bound: f64, reference: f64) -> Self {
        Self {
            bound,
            reference: Some(reference),
            margin: Some(bound - reference),
        }
    }

    pub fn bare(bound: f64) -> Self {
        Self {
            bound,
            reference: None,
            margin: None,
        }
    }
}

pub(crate) fn check_pair(x: f64, alpha: f64) -> Result<()> {
    check_half_pi("alpha", alpha)?;
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain {
            name: "x",
            value: x,
            domain: "(0, alpha)",
        });
    }
    if x.is_nan() || x >= alpha {
        return Err(Error::Ordering { x, alpha });
    }
    Ok(())
}

/// `2 sum_{k=0}^{k0} v^(2k+1) [u^(2k+1) - u^(2k0+3)] / (2k+1) + u^(2k0+3) ln((1+v)/(1-v))`,
/// an upper bound for `ln((1+uv)/(1-uv))`.
pub fn bernoulli_log_bound(q: &LemmaQuery) -> Result<f64> {
    q.validate()?;
    Ok(lemma_log_bound(q.u, q.v, q.k0))
}

fn lemma_log_bound(u: f64, v: f64, k0: i32) -> f64 {
    let u2 = u * u;
    let v2 = v * v;
    let mut top = u;
    for _ in 0..=k0 {
        top *= u2;
    }
    let mut acc = CompensatedSum::new();
    let (mut up, mut vp) = (u, v);
    for k in 0..=k0 {
        acc.add(2.0 * vp * (up - top) / f64::from(2 * k + 1));
        up *= u2;
        vp *= v2;
    }
    acc.add(top * log_ratio_unchecked(v));
    acc.value()
}

/// Exponential form: an upper bound for `(1+uv)/(1-uv)`.
pub fn bernoulli_ratio_bound(q: &LemmaQuery) -> Result<f64> {
    bernoulli_log_bound(q).map(f64::exp)
}

/// `[a_{-1}, a_0, ..., a_{k_max}]` at fixed `(u, v)`.
pub fn a_sequence(u: f64, v: f64, k_max: i32) -> Result<Vec<f64>> {
    LemmaQuery::new(u, v, k_max)?;
    Ok((-1..=k_max).map(|k| lemma_log_bound(u, v, k)).collect())
}

/// `a_k - a_{k+1} = 2 u^(2k+3) (1 - u^2) sum_{j>=k+2} v^(2j+1) / (2j+1)`.
///
/// The tail sum is summed directly when `v^2 <= 1/2` (so it keeps full
/// relative precision even when it is far below one ulp of `ln((1+v)/(1-v))`),
/// and is taken as `ln((1+v)/(1-v))/2 - S_{k+1}(v)` otherwise.
pub fn a_gap(u: f64, v: f64, k: i32, cfg: &SeriesConfig) -> Result<TruncatedValue> {
    LemmaQuery::new(u, v, k)?;
    let tail = atanh_tail(v, k + 2, cfg)?;
    let mut prefactor = 2.0 * (1.0 - u) * (1.0 + u);
    prefactor *= u;
    for _ in 0..=k {
        prefactor *= u * u;
    }
    Ok(TruncatedValue {
        value: prefactor * tail.value,
        tail_bound: prefactor * tail.tail_bound,
    })
}

// sum_{j >= first} v^(2j+1) / (2j+1)
fn atanh_tail(v: f64, first: i32, cfg: &SeriesConfig) -> Result<TruncatedValue> {
    let v2 = v * v;
    if v2 > 0.5 {
        let value = 0.5 * log_ratio_unchecked(v) - partial_sum_s_unchecked(v, first - 1);
        return Ok(TruncatedValue::exact(value));
    }
    let mut power = v;
    for _ in 0..first {
        power *= v2;
    }
    let mut acc = CompensatedSum::new();
    let mut j = first;
    for _ in 0..cfg.max_terms {
        acc.add(power / f64::from(2 * j + 1));
        power *= v2;
        j += 1;
        // remaining terms are dominated by a geometric series
        let remainder = power / (f64::from(2 * j + 1) * (1.0 - v2));
        if remainder <= 0.25 * f64::EPSILON * acc.value() {
            return Ok(TruncatedValue {
                value: acc.value(),
                tail_bound: remainder,
            });
        }
    }
    Err(Error::Accuracy {
        target: 0.25 * f64::EPSILON,
        max_terms: cfg.max_terms,
    })
}

/// Where `coshcos_bound_with` takes the `I_k` constants from.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaSource {
    /// `(1 - 2^-(4k+2)) zeta(4k+2)`.
    #[default]
    Closed,
    /// Direct odd-denominator summation with integral tail.
    Partial,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CoshCosOptions {
    pub lambda_source: LambdaSource,
    /// Fault injection for mutation testing of the verification suite:
    /// flips the sign of the correction sum.
    #[doc(hidden)]
    pub negate_correction: bool,
}

fn lambda_partial_cached(k: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let cfg = SeriesConfig::default();
        (0..=crate::K0_MAX as u32)
            .map(|k| {
                lambda_sum_partial(k, &cfg)
                    .expect("default configuration reaches its tail target")
                    .value
            })
            .collect()
    })[k]
}

/// Log of the generic family bound
/// `R(alpha)^(t^(4k0+6)) exp{2 sum_{k<=k0} r^(2k+1) [t^(4k+2) - t^(4k0+6)] c_k / (2k+1)}`
/// with `t = x/alpha`.
fn family_log_bound(
    t: f64,
    ln_ratio_alpha: f64,
    r: f64,
    k0: i32,
    coefficient: impl Fn(usize) -> f64,
    correction_sign: f64,
) -> f64 {
    let t2 = t * t;
    let t4 = t2 * t2;
    let r2 = r * r;
    let mut top = t2;
    for _ in 0..=k0 {
        top *= t4;
    }
    let mut acc = CompensatedSum::new();
    acc.add(top * ln_ratio_alpha);
    if k0 >= 0 {
        let mut correction = CompensatedSum::new();
        let (mut tp, mut rp) = (t2, r);
        for k in 0..=k0 as usize {
            correction.add(2.0 * rp * (tp - top) * coefficient(k) / (2 * k + 1) as f64);
            tp *= t4;
            rp *= r2;
        }
        acc.add(correction_sign * correction.value());
    }
    acc.value()
}

/// `b_{k0}`, an upper bound for `cosh x / cos x` on `0 < x < alpha < pi/2`,
/// non-increasing in `k0`.
pub fn coshcos_bound(x: f64, alpha: f64, k0: i32) -> Result<f64> {
    coshcos_bound_with(x, alpha, k0, &CoshCosOptions::default())
}

pub fn coshcos_bound_with(x: f64, alpha: f64, k0: i32, opts: &CoshCosOptions) -> Result<f64> {
    check_pair(x, alpha)?;
    refinement_level(k0)?;
    let r = 4.0 * alpha * alpha / (PI * PI);
    let sign = if opts.negate_correction { -1.0 } else { 1.0 };
    let log_bound = match opts.lambda_source {
        LambdaSource::Closed => family_log_bound(
            x / alpha,
            ln_ratio_coshcos_unchecked(alpha),
            r,
            k0,
            lambda_closed_cached,
            sign,
        ),
        LambdaSource::Partial => family_log_bound(
            x / alpha,
            ln_ratio_coshcos_unchecked(alpha),
            r,
            k0,
            lambda_partial_cached,
            sign,
        ),
    };
    Ok(log_bound.exp())
}

/// Upper bound for `sinh x / sin x` on `0 < x < alpha < pi/2`, built with
/// `zeta(4k+2)` in place of `I_k` and `alpha^2/pi^2` in place of `4 alpha^2/pi^2`.
pub fn sinhsin_bound(x: f64, alpha: f64, k0: i32) -> Result<f64> {
    check_pair(x, alpha)?;
    refinement_level(k0)?;
    let r = alpha * alpha / (PI * PI);
    let log_bound = family_log_bound(
        x / alpha,
        ln_ratio_sinhsin_unchecked(alpha),
        r,
        k0,
        zeta_4k2,
        1.0,
    );
    Ok(log_bound.exp())
}

/// `((pi^2 + 4x^2) / (pi^2 - 4x^2))^(pi^2/8)`, valid on all of (0, pi/2).
pub fn coshcos_limit_bound(x: f64) -> Result<f64> {
    check_half_pi("x", x)?;
    let w = 2.0 * x / PI;
    Ok((PI * PI / 8.0 * log_ratio_unchecked(w * w)).exp())
}

/// `beta = ln(cosh alpha / cos alpha) / alpha^2`, the smallest constant with
/// `cosh x / cos x <= exp(beta x^2)` on (0, alpha).
pub fn best_exp_constant(alpha: f64) -> Result<f64> {
    check_half_pi("alpha", alpha)?;
    Ok(ln_ratio_coshcos_unchecked(alpha) / (alpha * alpha))
}

/// `exp(beta x^2)` with `beta = best_exp_constant(alpha)`.
///
/// Evaluated as `exp(ln(cosh alpha/cos alpha) (x/alpha)^2)`, which is the
/// same expression as `coshcos_bound(x, alpha, -1)`.
pub fn exp_envelope(x: f64, alpha: f64) -> Result<f64> {
    check_pair(x, alpha)?;
    let t = x / alpha;
    Ok((t * t * ln_ratio_coshcos_unchecked(alpha)).exp())
}
