//! Series and constant machinery.
//!
//! The atanh-type log ratio `ln((1+v)/(1-v))`, its partial sums, even zeta
//! values, and the odd-denominator sums `I_k = sum_{n>=1} (2n-1)^-(4k+2)`.
//! Every truncated series comes back as a [`TruncatedValue`] whose
//! `tail_bound` is rigorous: it is derived from integral comparisons on a
//! convex decreasing summand, never from term-ratio heuristics.

mod sum;

use std::env;
use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use sum::{compensated_sum, CompensatedSum};

use crate::error::{open_interval, Error, Result};

/// A truncated series value together with a bound on the truncation error.
///
/// `tail_bound` covers `|true - value|` from truncation only; floating point
/// rounding is not included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncatedValue {
    pub value: f64,
    pub tail_bound: f64,
}

impl TruncatedValue {
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            tail_bound: 0.0,
        }
    }

    /// True if `other` lies in `[value - tail_bound - slack, value + tail_bound + slack]`.
    pub fn contains(&self, other: f64, slack: f64) -> bool {
        (other - self.value).abs() <= self.tail_bound + slack
    }
}

/// Truncation policy for the infinite series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    pub max_terms: usize,
    pub target_tail: f64,
}

/// Environment variable overriding [`SeriesConfig::max_terms`].
pub const MAX_TERMS_ENV: &str = "RATIO_BOUNDS_MAX_TERMS";

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            max_terms: 1_000_000,
            target_tail: 1e-14,
        }
    }
}

impl SeriesConfig {
    pub fn new(max_terms: usize, target_tail: f64) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::Config("max_terms must be at least 1".into()));
        }
        if !(target_tail > 0.0 && target_tail.is_finite()) {
            return Err(Error::Config(format!(
                "target_tail must be positive and finite, got {target_tail}"
            )));
        }
        Ok(Self {
            max_terms,
            target_tail,
        })
    }

    /// Default configuration with `max_terms` taken from
    /// `RATIO_BOUNDS_MAX_TERMS` when that variable is set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(raw) = env::var(MAX_TERMS_ENV) {
            let n: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("{MAX_TERMS_ENV}={raw:?} is not a count")))?;
            cfg = Self::new(n, cfg.target_tail)?;
        }
        Ok(cfg)
    }
}

/// `ln((1+v)/(1-v)) = 2 atanh(v)` for `v` in (0, 1).
pub fn log_ratio(v: f64) -> Result<f64> {
    open_interval("v", v, 0.0, 1.0, "(0, 1)")?;
    Ok(log_ratio_unchecked(v))
}

#[inline]
pub(crate) fn log_ratio_unchecked(v: f64) -> f64 {
    (2.0 * v / (1.0 - v)).ln_1p()
}

/// `S_{k0}(a) = sum_{k=0}^{k0} a^(2k+1) / (2k+1)`; the empty sum for `k0 = -1`.
pub fn partial_sum_s(a: f64, k0: i32) -> Result<f64> {
    open_interval("a", a, 0.0, 1.0, "(0, 1)")?;
    if k0 < -1 {
        return Err(Error::RefinementLevel(k0));
    }
    Ok(partial_sum_s_unchecked(a, k0))
}

pub(crate) fn partial_sum_s_unchecked(a: f64, k0: i32) -> f64 {
    let a2 = a * a;
    let mut power = a;
    let mut acc = CompensatedSum::new();
    for k in 0..=k0 {
        if power == 0.0 {
            break;
        }
        acc.add(power / f64::from(2 * k + 1));
        power *= a2;
    }
    acc.value()
}

/// `zeta(2m)` for `m >= 1`.
///
/// `zeta(2)` and `zeta(6)` are the analytic constants. Other values are a
/// direct sum over `n < N` plus the Euler-Maclaurin correction
/// `N^(1-s)/(s-1) + N^(-s)/2`; because `n^-s` is completely monotone the
/// remainder is bounded by the next correction term `s N^(-s-1) / 12`.
pub fn zeta_even(m: u32, cfg: &SeriesConfig) -> Result<TruncatedValue> {
    match m {
        0 => Err(Error::Domain {
            name: "m",
            value: 0.0,
            domain: "m >= 1",
        }),
        1 => Ok(TruncatedValue::exact(PI * PI / 6.0)),
        3 => Ok(TruncatedValue::exact(PI.powi(6) / 945.0)),
        _ => zeta_euler_maclaurin(f64::from(2 * m), cfg),
    }
}

fn zeta_euler_maclaurin(s: f64, cfg: &SeriesConfig) -> Result<TruncatedValue> {
    let remainder = |n: f64| s / 12.0 * n.powf(-s - 1.0);
    let mut n = (s / (12.0 * cfg.target_tail))
        .powf(1.0 / (s + 1.0))
        .ceil()
        .max(2.0);
    while remainder(n) > cfg.target_tail {
        n += 1.0;
    }
    let n_terms = n as usize;
    if n_terms > cfg.max_terms {
        return Err(Error::Accuracy {
            target: cfg.target_tail,
            max_terms: cfg.max_terms,
        });
    }
    let head = compensated_sum((1..n_terms).rev().map(|j| (j as f64).powf(-s)));
    let correction = n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);
    Ok(TruncatedValue {
        value: compensated_sum([head, correction]),
        tail_bound: remainder(n),
    })
}

fn odd_power_term(n: f64, s: f64) -> f64 {
    (2.0 * n - 1.0).powf(-s)
}

fn odd_power_integral(t: f64, s: f64) -> f64 {
    // integral of (2u-1)^-s over [t, inf)
    (2.0 * t - 1.0).powf(1.0 - s) / (2.0 * (s - 1.0))
}

/// `I_k` summed over `n = 1..=n_terms` plus an integral estimate of the rest.
///
/// For the convex decreasing summand `f(t) = (2t-1)^-s` the omitted tail
/// lies in `[F(N+1) + f(N+1)/2, F(N+1/2)]` with `F` the integral from `t` to
/// infinity. The value uses the midpoint of that bracket and `tail_bound`
/// is the half-width bound `(f(N+1/2) - f(N+1)) / 8`.
pub fn lambda_sum_with_terms(k: u32, n_terms: usize) -> TruncatedValue {
    let s = f64::from(4 * k + 2);
    let n = n_terms as f64;
    let head = compensated_sum((1..=n_terms).rev().map(|j| odd_power_term(j as f64, s)));
    let lower = odd_power_integral(n + 1.0, s) + 0.5 * odd_power_term(n + 1.0, s);
    let upper = odd_power_integral(n + 0.5, s);
    TruncatedValue {
        value: compensated_sum([head, 0.5 * (lower + upper)]),
        tail_bound: lambda_tail_bound(n, s),
    }
}

fn lambda_tail_bound(n: f64, s: f64) -> f64 {
    (odd_power_term(n + 0.5, s) - odd_power_term(n + 1.0, s)) / 8.0
}

/// `I_k = sum_{n>=1} (2n-1)^-(4k+2)` by direct summation, using the fewest
/// terms that bring the tail bound under `cfg.target_tail`.
pub fn lambda_sum_partial(k: u32, cfg: &SeriesConfig) -> Result<TruncatedValue> {
    let s = f64::from(4 * k + 2);
    let ok = |n: usize| lambda_tail_bound(n as f64, s) <= cfg.target_tail;
    let mut hi = 1usize;
    while !ok(hi) {
        if hi >= cfg.max_terms {
            return Err(Error::Accuracy {
                target: cfg.target_tail,
                max_terms: cfg.max_terms,
            });
        }
        hi = (hi * 2).min(cfg.max_terms);
    }
    let mut lo = hi / 2;
    // smallest passing count in (lo, hi]
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(lambda_sum_with_terms(k, hi))
}

/// `I_k = (1 - 2^-(4k+2)) zeta(4k+2)` with the zeta tail carried through.
pub fn lambda_sum_closed_with(k: u32, cfg: &SeriesConfig) -> Result<TruncatedValue> {
    let factor = 1.0 - (-f64::from(4 * k + 2)).exp2();
    let zeta = zeta_even(2 * k + 1, cfg)?;
    Ok(TruncatedValue {
        value: factor * zeta.value,
        tail_bound: factor * zeta.tail_bound,
    })
}

/// `I_k` from the zeta closed form with the default configuration.
pub fn lambda_sum_closed(k: u32) -> Result<f64> {
    lambda_sum_closed_with(k, &SeriesConfig::default()).map(|t| t.value)
}

/// `(1 - 2^-(4k+2)) / (1 - 2^-(4k+1))`, an upper bound for `I_k` obtained
/// from `zeta(s) <= 1 / (1 - 2^(1-s))` at `s = 4k+2`.
pub fn lambda_sum_upper(k: u32) -> f64 {
    let s = f64::from(4 * k + 2);
    (1.0 - (-s).exp2()) / (1.0 - (1.0 - s).exp2())
}

struct Tables {
    zeta_4k2: Vec<f64>,
    lambda: Vec<f64>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let cfg = SeriesConfig::default();
        let len = crate::K0_MAX as u32 + 1;
        let zeta_4k2: Vec<f64> = (0..len)
            .map(|k| {
                zeta_even(2 * k + 1, &cfg)
                    .expect("default configuration reaches its tail target")
                    .value
            })
            .collect();
        let lambda = (0..len)
            .map(|k| (1.0 - (-f64::from(4 * k + 2)).exp2()) * zeta_4k2[k as usize])
            .collect();
        Tables { zeta_4k2, lambda }
    })
}

/// Cached `zeta(4k+2)` for `k <= K0_MAX`.
pub(crate) fn zeta_4k2(k: usize) -> f64 {
    tables().zeta_4k2[k]
}

/// Cached closed-form `I_k` for `k <= K0_MAX`.
pub(crate) fn lambda_closed_cached(k: usize) -> f64 {
    tables().lambda[k]
}
