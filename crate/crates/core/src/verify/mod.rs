//! Grid sweeps that check every inequality and identity of the crate.
//!
//! Each `verify_*` function evaluates its cases (in parallel) and reduces
//! them to a [`VerificationReport`]. A failed inequality is data: it shows
//! up as a [`Violation`] in the report and never aborts the sweep.

mod report;

use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;

pub use report::{CaseInputs, GridSpec, VerificationReport, Violation};

use crate::bounds::{
    a_gap, a_sequence, best_exp_constant, coshcos_bound_with, coshcos_limit_bound, exp_envelope,
    sinhsin_bound, CoshCosOptions, Family, LemmaQuery,
};
use crate::oracle::{ln_ratio_coshcos_unchecked, ratio_coshcos, ratio_sinhsin_unchecked};
use crate::series::{
    lambda_sum_closed_with, lambda_sum_partial, lambda_sum_upper, log_ratio_unchecked, SeriesConfig,
};
use report::{inset_axis, reduce, Case, Check};

/// Points used by the one-dimensional sweeps (limit bound, best constant).
pub const LINE_POINTS: usize = 200;

/// Tolerance of the `k0 -> infinity` convergence check in the full suite.
pub const CONVERGENCE_TOL: f64 = 1e-9;

/// Refinement level treated as converged.
pub const CONVERGED_K0: i32 = 30;

/// Alphas probed by the best-constant check in the full suite.
pub const BEST_CONSTANT_ALPHAS: [f64; 3] = [0.5, 1.0, 1.4];

/// How the optimality of `beta` is probed: with `gamma = beta (1 - shrink)`
/// the envelope `exp(gamma x^2)` must fall below `cosh x / cos x` at
/// `x = alpha (1 - offset)`.
///
/// Near `alpha` the two sides separate like `(shrink - c offset) ln(cosh
/// alpha/cos alpha)` with `c = alpha g'(alpha)/g(alpha)`, which is about 0.011
/// at `alpha = 0.5` and 1.7 at `alpha = 1.4`, so `offset` has to be well below
/// `shrink` for a violation to appear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalityProbe {
    pub shrink: f64,
    pub offset: f64,
}

impl Default for OptimalityProbe {
    fn default() -> Self {
        Self {
            shrink: 1e-6,
            offset: 1e-7,
        }
    }
}

/// Settings shared by the sweeps.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Verifier {
    pub series: SeriesConfig,
    pub coshcos: CoshCosOptions,
    pub optimality: OptimalityProbe,
}

/// Which sweeps make up a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Lemma,
    AMonotone,
    Ratio,
    Limit,
    Convergence,
    BestConstant,
    Lambda,
}

// ratio-scale margin
fn scaled(diff: f64, reference: f64) -> f64 {
    diff / reference.abs().max(1.0)
}

impl Verifier {
    /// `bernoulli_log_bound >= ln((1+uv)/(1-uv)) - tol` on the `(u, v)` grid.
    pub fn lemma(&self, grid: &GridSpec, tol: f64) -> VerificationReport {
        let axis = grid.axis(0.0, 1.0);
        let points: Vec<(f64, f64, i32)> = axis
            .iter()
            .flat_map(|&u| axis.iter().map(move |&v| (u, v)))
            .flat_map(|(u, v)| grid.k0_set().iter().map(move |&k0| (u, v, k0)))
            .collect();
        let cases: Vec<Case> = points
            .par_iter()
            .map(|&(u, v, k0)| {
                let bound = LemmaQuery::new(u, v, k0)
                    .and_then(|q| crate::bounds::bernoulli_log_bound(&q))
                    .unwrap_or(f64::NAN);
                Case {
                    inputs: CaseInputs::new(&[("u", u), ("v", v), ("k0", f64::from(k0))]),
                    checks: vec![Check::tolerant(
                        "dominance",
                        bound - log_ratio_unchecked(u * v),
                    )],
                }
            })
            .collect();
        reduce("lemma", grid.clone(), tol, cases)
    }

    /// Strict decrease of `a_k` for `k = -1..=k_max` and agreement of the
    /// direct differences with the closed-form gap.
    pub fn a_monotone(&self, grid: &GridSpec, k_max: i32, tol: f64) -> VerificationReport {
        let axis = grid.axis(0.0, 1.0);
        let pairs: Vec<(f64, f64)> = axis
            .iter()
            .flat_map(|&u| axis.iter().map(move |&v| (u, v)))
            .collect();
        let cases: Vec<Case> = pairs
            .par_iter()
            .flat_map_iter(|&(u, v)| {
                let seq = a_sequence(u, v, k_max).unwrap_or_default();
                (-1..k_max).map(move |k| {
                    let i = (k + 1) as usize;
                    let direct = match (seq.get(i), seq.get(i + 1)) {
                        (Some(a), Some(b)) => a - b,
                        _ => f64::NAN,
                    };
                    let checks = match a_gap(u, v, k, &self.series) {
                        Ok(gap) => vec![
                            Check::strict("strict decrease", gap.value),
                            Check::tolerant(
                                "gap identity",
                                gap.tail_bound - (direct - gap.value).abs(),
                            ),
                        ],
                        Err(_) => vec![Check::strict("gap evaluation", f64::NAN)],
                    };
                    Case {
                        inputs: CaseInputs::new(&[("u", u), ("v", v), ("k", f64::from(k))]),
                        checks,
                    }
                })
            })
            .collect();
        reduce("a-monotone", grid.clone(), tol, cases)
    }

    /// Dominance of a ratio family over `x = alpha t`, plus (for cosh/cos)
    /// monotonicity in `k0` along the sorted `k0_set`.
    pub fn ratio_bounds(&self, grid: &GridSpec, family: Family, tol: f64) -> VerificationReport {
        let alphas = grid.axis(0.0, FRAC_PI_2);
        let ts = grid.axis(0.0, 1.0);
        let pairs: Vec<(f64, f64)> = alphas
            .iter()
            .flat_map(|&alpha| ts.iter().map(move |&t| (alpha * t, alpha)))
            .collect();
        let k0_set = grid.k0_set();
        let cases: Vec<Case> = pairs
            .par_iter()
            .flat_map_iter(|&(x, alpha)| {
                let reference = match family {
                    Family::CoshCos => ratio_coshcos(x).unwrap_or(f64::NAN),
                    Family::SinhSin => ratio_sinhsin_unchecked(x),
                };
                let mut previous: Option<f64> = None;
                k0_set
                    .iter()
                    .map(|&k0| {
                        let bound = match family {
                            Family::CoshCos => coshcos_bound_with(x, alpha, k0, &self.coshcos),
                            Family::SinhSin => sinhsin_bound(x, alpha, k0),
                        }
                        .unwrap_or(f64::NAN);
                        let mut checks = vec![Check::tolerant(
                            "dominance",
                            scaled(bound - reference, reference),
                        )];
                        if family == Family::CoshCos {
                            if let Some(prev) = previous {
                                checks.push(Check::tolerant(
                                    "non-increasing in k0",
                                    scaled(prev - bound, prev),
                                ));
                            }
                        }
                        previous = Some(bound);
                        Case {
                            inputs: CaseInputs::new(&[
                                ("x", x),
                                ("alpha", alpha),
                                ("k0", f64::from(k0)),
                            ]),
                            checks,
                        }
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        reduce(
            &format!("ratio-{}", family.name()),
            grid.clone(),
            tol,
            cases,
        )
    }

    /// Limit bound dominance on `points` inset points of (0, pi/2), and the
    /// chain `b_30(x, alpha) <= limit(x)` for several `alpha` above each `x`.
    pub fn limit_bound(&self, points: usize, tol: f64) -> VerificationReport {
        let grid = GridSpec::new(
            points.max(1),
            GridSpec::default().inset(),
            vec![CONVERGED_K0],
        )
        .expect("valid grid");
        let top = FRAC_PI_2 - grid.inset();
        let xs = grid.axis(0.0, FRAC_PI_2);
        let cases: Vec<Case> = xs
            .par_iter()
            .flat_map_iter(|&x| {
                let limit = coshcos_limit_bound(x).unwrap_or(f64::NAN);
                let reference = ratio_coshcos(x).unwrap_or(f64::NAN);
                let mut cases = vec![Case {
                    inputs: CaseInputs::new(&[("x", x)]),
                    checks: vec![Check::tolerant(
                        "dominance",
                        scaled(limit - reference, reference),
                    )],
                }];
                if x < top {
                    for s in [0.25, 0.5, 0.75, 1.0] {
                        let alpha = x + s * (top - x);
                        let b = coshcos_bound_with(x, alpha, CONVERGED_K0, &self.coshcos)
                            .unwrap_or(f64::NAN);
                        cases.push(Case {
                            inputs: CaseInputs::new(&[("x", x), ("alpha", alpha)]),
                            checks: vec![Check::tolerant(
                                "converged family below limit",
                                scaled(limit - b, limit),
                            )],
                        });
                    }
                }
                cases
            })
            .collect();
        reduce("limit", grid, tol, cases)
    }

    /// `|b_{k_hi}(x, alpha) - ratio(x)| <= tol` for both families.
    pub fn convergence(&self, x: f64, alpha: f64, k_hi: i32, tol: f64) -> VerificationReport {
        let grid =
            GridSpec::new(1, GridSpec::default().inset(), vec![k_hi.max(-1)]).unwrap_or_default();
        let inputs = CaseInputs::new(&[("x", x), ("alpha", alpha), ("k0", f64::from(k_hi))]);
        let cases = [Family::CoshCos, Family::SinhSin].map(|family| {
            let bound = match family {
                Family::CoshCos => coshcos_bound_with(x, alpha, k_hi, &self.coshcos),
                Family::SinhSin => sinhsin_bound(x, alpha, k_hi),
            };
            let diff = match (bound, family.reference(x)) {
                (Ok(b), Ok(r)) => (b - r).abs(),
                _ => f64::NAN,
            };
            Case {
                inputs: inputs.clone(),
                checks: vec![Check::tolerant(
                    match family {
                        Family::CoshCos => "coshcos converges",
                        Family::SinhSin => "sinhsin converges",
                    },
                    -diff,
                )],
            }
        });
        reduce("convergence", grid, tol, cases)
    }

    /// Monotonicity of `g(x) = ln(cosh x/cos x)/x^2`, dominance of the
    /// envelope on (0, alpha), and optimality of `beta` per
    /// [`OptimalityProbe`].
    pub fn best_constant(&self, alphas: &[f64], tol: f64) -> VerificationReport {
        let grid =
            GridSpec::new(LINE_POINTS, GridSpec::default().inset(), vec![-1]).expect("valid grid");
        let g = |x: f64| ln_ratio_coshcos_unchecked(x) / (x * x);
        let xs = grid.axis(0.0, FRAC_PI_2);
        let mut cases: Vec<Case> = xs
            .windows(2)
            .map(|w| Case {
                inputs: CaseInputs::new(&[("x", w[1])]),
                checks: vec![Check::tolerant("g non-decreasing", g(w[1]) - g(w[0]))],
            })
            .collect();

        for &alpha in alphas {
            let Ok(beta) = best_exp_constant(alpha) else {
                cases.push(Case {
                    inputs: CaseInputs::new(&[("alpha", alpha)]),
                    checks: vec![Check::strict("alpha in domain", f64::NAN)],
                });
                continue;
            };
            let ts = inset_axis(0.0, 1.0, LINE_POINTS, grid.inset());
            let envelope: Vec<Case> = ts
                .par_iter()
                .map(|&t| {
                    let x = alpha * t;
                    let reference = ratio_coshcos(x).unwrap_or(f64::NAN);
                    let env = exp_envelope(x, alpha).unwrap_or(f64::NAN);
                    Case {
                        inputs: CaseInputs::new(&[("alpha", alpha), ("x", x)]),
                        checks: vec![Check::tolerant(
                            "envelope dominance",
                            scaled(env - reference, reference),
                        )],
                    }
                })
                .collect();
            cases.extend(envelope);

            let x = alpha * (1.0 - self.optimality.offset);
            let gamma = beta * (1.0 - self.optimality.shrink);
            cases.push(Case {
                inputs: CaseInputs::new(&[("alpha", alpha), ("x", x)]),
                checks: vec![Check::strict(
                    "shrunken constant fails",
                    ln_ratio_coshcos_unchecked(x) - gamma * x * x,
                )],
            });
        }
        reduce("best-constant", grid, tol, cases)
    }

    /// Closed form of `I_k` against direct summation, and the zeta-based
    /// upper bound, for `k = 0..=k_max`.
    pub fn lambda_sums(&self, k_max: u32, tol: f64) -> VerificationReport {
        let grid = GridSpec::new(
            k_max as usize + 1,
            GridSpec::default().inset(),
            (0..=(k_max as i32).min(crate::K0_MAX)).collect(),
        )
        .expect("valid grid");
        let i0 = PI * PI / 8.0;
        let cases: Vec<Case> = (0..=k_max)
            .into_par_iter()
            .map(|k| {
                let inputs = CaseInputs::new(&[("k", f64::from(k))]);
                let (closed, partial) = match (
                    lambda_sum_closed_with(k, &self.series),
                    lambda_sum_partial(k, &self.series),
                ) {
                    (Ok(c), Ok(p)) => (c, p),
                    _ => {
                        return Case {
                            inputs,
                            checks: vec![Check::strict("series accuracy", f64::NAN)],
                        }
                    }
                };
                Case {
                    inputs,
                    checks: vec![
                        Check::tolerant(
                            "closed form matches direct sum",
                            closed.tail_bound + partial.tail_bound
                                - (closed.value - partial.value).abs(),
                        ),
                        Check::tolerant(
                            "below zeta upper bound",
                            lambda_sum_upper(k) - closed.value,
                        ),
                        Check::tolerant("below pi^2/8", i0 - closed.value),
                    ],
                }
            })
            .collect();
        reduce("lambda", grid, tol, cases)
    }

    /// Run a suite with the standard parameters. `grid` drives the
    /// two-dimensional sweeps; convergence always uses [`CONVERGENCE_TOL`].
    pub fn run(&self, suite: Suite, grid: &GridSpec, tol: f64) -> Vec<VerificationReport> {
        let mut reports = Vec::new();
        let all = suite == Suite::All;
        if all || suite == Suite::Lemma {
            reports.push(self.lemma(grid, tol));
        }
        if all || suite == Suite::AMonotone {
            let k_max = grid.k0_set().last().copied().unwrap_or(8);
            reports.push(self.a_monotone(grid, k_max, tol));
        }
        if all || suite == Suite::Ratio {
            reports.push(self.ratio_bounds(grid, Family::CoshCos, tol));
            reports.push(self.ratio_bounds(grid, Family::SinhSin, tol));
        }
        if all || suite == Suite::Limit {
            reports.push(self.limit_bound(LINE_POINTS, tol));
        }
        if all || suite == Suite::Convergence {
            reports.push(self.convergence(0.5, 1.0, CONVERGED_K0, CONVERGENCE_TOL));
        }
        if all || suite == Suite::BestConstant {
            reports.push(self.best_constant(&BEST_CONSTANT_ALPHAS, tol));
        }
        if all || suite == Suite::Lambda {
            reports.push(self.lambda_sums(8, tol));
        }
        reports
    }
}

pub fn verify_lemma(grid: &GridSpec, tol: f64) -> VerificationReport {
    Verifier::default().lemma(grid, tol)
}

pub fn verify_a_monotone(grid: &GridSpec, k_max: i32, tol: f64) -> VerificationReport {
    Verifier::default().a_monotone(grid, k_max, tol)
}

pub fn verify_ratio_bounds(grid: &GridSpec, family: Family, tol: f64) -> VerificationReport {
    Verifier::default().ratio_bounds(grid, family, tol)
}

pub fn verify_limit_bound(points: usize, tol: f64) -> VerificationReport {
    Verifier::default().limit_bound(points, tol)
}

pub fn verify_convergence(x: f64, alpha: f64, k_hi: i32, tol: f64) -> VerificationReport {
    Verifier::default().convergence(x, alpha, k_hi, tol)
}

pub fn verify_best_constant(alphas: &[f64], tol: f64) -> VerificationReport {
    Verifier::default().best_constant(alphas, tol)
}

pub fn verify_lambda_sums(k_max: u32, tol: f64) -> VerificationReport {
    Verifier::default().lambda_sums(k_max, tol)
}
