//! Acceptance criteria, one test each. Every test prints a single
//! `[PASS]` / `[FAIL]` line (visible with `--nocapture`).
//!
//! Frozen numbers come from `tests/oracle/reference_values.py`
//! (mpmath, 50 digits).

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use ratio_bounds::bounds::{coshcos_bound, sinhsin_bound, Family};
use ratio_bounds::oracle::{
    ln_ratio_coshcos, product_coshcos, product_coshcos_corrected, ratio_coshcos, ratio_sinhsin,
};
use ratio_bounds::series::{lambda_sum_closed, lambda_sum_upper, lambda_sum_with_terms};
use ratio_bounds::verify::{
    verify_a_monotone, verify_best_constant, verify_convergence, verify_lemma, verify_limit_bound,
    verify_ratio_bounds, GridSpec, VerificationReport, Verifier,
};

const TOL: f64 = 1e-12;

fn criterion(name: &str, ok: bool, detail: impl std::fmt::Display) {
    println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name}: {detail}");
}

fn describe(r: &VerificationReport) -> String {
    format!(
        "{} cases, worst margin {:e} at {:?}, {} violations",
        r.cases_run,
        r.worst_margin,
        r.worst_case_inputs.fields(),
        r.violations.len()
    )
}

#[test]
fn lemma_dominance_on_full_grid() {
    let grid = GridSpec::default();
    let start = Instant::now();
    let report = verify_lemma(&grid, TOL);
    let elapsed = start.elapsed();
    criterion(
        "lemma dominance, 64x64 grid x k0 in -1..=8",
        report.passed && report.cases_run == 64 * 64 * 10 && elapsed < Duration::from_secs(5),
        format!("{} in {elapsed:?}", describe(&report)),
    );
}

#[test]
fn a_sequence_strictly_decreasing_with_gap_identity() {
    let report = verify_a_monotone(&GridSpec::default(), 8, TOL);
    criterion(
        "a_k strictly decreasing for k = -1..=8, gap identity within 1e-12 + tail",
        report.passed && report.violations.is_empty() && report.cases_run == 64 * 64 * 9,
        describe(&report),
    );
}

#[test]
fn coshcos_family_dominates_and_decreases() {
    let report = verify_ratio_bounds(&GridSpec::default(), Family::CoshCos, TOL);
    let b_m1 = coshcos_bound(0.5, 1.0, -1).unwrap();
    let b_0 = coshcos_bound(0.5, 1.0, 0).unwrap();
    let spot = (b_m1 - 1.299_983_829_075_277_4).abs() <= 1e-5
        && (b_0 - 1.285_017_052_999_783_5).abs() <= 1e-5;
    criterion(
        "cosh/cos family: dominance and monotone in k0 on 64x64 (x = alpha t) grid",
        report.passed && report.cases_run == 64 * 64 * 10 && spot,
        format!(
            "{}; b_-1(0.5,1) = {b_m1:.10}, b_0(0.5,1) = {b_0:.10}",
            describe(&report)
        ),
    );
}

#[test]
fn limit_bound_dominates() {
    let report = verify_limit_bound(200, TOL);
    let margin =
        ratio_bounds::bounds::coshcos_limit_bound(0.5).unwrap() - ratio_coshcos(0.5).unwrap();
    let expected = 2.082_509_595_248_342e-4;
    criterion(
        "limit bound dominates on 200 inset points",
        report.passed && ((margin - expected) / expected).abs() <= 0.1,
        format!("{}; margin at 0.5 = {margin:e}", describe(&report)),
    );
}

#[test]
fn sinhsin_family_dominates() {
    let report = verify_ratio_bounds(&GridSpec::default(), Family::SinhSin, TOL);
    let margin = sinhsin_bound(0.5, 1.0, 0).unwrap() - ratio_sinhsin(0.5).unwrap();
    criterion(
        "sinh/sin family dominates on 64x64 grid x k0 in -1..=8",
        report.passed && margin > 0.0 && (-TOL..1e-5).contains(&margin),
        format!("{}; margin at (0.5, 1, 0) = {margin:e}", describe(&report)),
    );
}

// Written independently of the library: plain forward summation over
// n = 1..=10^6 plus the integral of (2t-1)^-s from N+1/2 to infinity.
fn naive_lambda(k: u32) -> f64 {
    let s = f64::from(4 * k + 2);
    let n = 1_000_000u32;
    let mut sum = 0.0f64;
    for j in (1..=n).rev() {
        sum += (2.0 * f64::from(j) - 1.0).powf(-s);
    }
    sum + (2.0 * f64::from(n)).powf(1.0 - s) / (2.0 * (s - 1.0))
}

#[test]
fn zeta_closed_form_matches_direct_sums() {
    let mut worst = 0.0f64;
    let mut ok = true;
    for k in 0..=8 {
        let closed = lambda_sum_closed(k).unwrap();
        let direct = lambda_sum_with_terms(k, 1_000_000);
        let diff = (closed - direct.value).abs();
        worst = worst.max(diff);
        ok &= diff <= TOL;
        ok &= (closed - naive_lambda(k)).abs() <= TOL;
        ok &= closed <= lambda_sum_upper(k);
    }
    let i0 = lambda_sum_closed(0).unwrap();
    let rel0 = ((i0 - PI * PI / 8.0) / (PI * PI / 8.0)).abs();
    criterion(
        "I_k closed form vs 10^6-term sums for k = 0..=8, I_0 = pi^2/8, I_k <= upper",
        ok && rel0 <= 1e-14,
        format!("worst |closed - direct| = {worst:e}, I_0 relative error {rel0:e}"),
    );
}

fn g(x: f64) -> f64 {
    ln_ratio_coshcos(x).unwrap() / (x * x)
}

#[test]
fn best_constant_g_non_decreasing() {
    let n = 200;
    let xs: Vec<f64> = (0..n)
        .map(|i| 1e-3 + (PI / 2.0 - 2e-3) * i as f64 / (n - 1) as f64)
        .collect();
    let worst = xs
        .windows(2)
        .map(|w| g(w[1]) - g(w[0]))
        .fold(f64::INFINITY, f64::min);
    criterion(
        "g(x) = ln(cosh x/cos x)/x^2 non-decreasing on 200 points",
        worst >= -TOL,
        format!("smallest increment {worst:e}"),
    );
}

#[test]
fn best_constant_optimality_probe() {
    // library probe: shrink 1e-6 at x = alpha (1 - 1e-7)
    let report = verify_best_constant(&[0.5, 1.0, 1.4], TOL);
    criterion(
        "beta optimal: envelope dominates, beta (1 - 1e-6) fails near alpha",
        report.passed,
        describe(&report),
    );
}

/// The criterion exactly as stated: with gamma = beta (1 - 1e-6) the
/// envelope must fall below the ratio at x = alpha (1 - 1e-4).
///
/// This cannot hold. Since g is increasing, exp(gamma x^2) < cosh x/cos x
/// requires g(x)/g(alpha) > 1 - 1e-6, but at a relative offset of 1e-4,
/// g(x)/g(alpha) is about 1 - 1e-4 alpha g'(alpha)/g(alpha), and
/// alpha g'(alpha)/g(alpha) is 0.011, 0.21 and 1.7 at alpha = 0.5, 1.0
/// and 1.4. The extended-precision margins (ratio - envelope) are
/// -3.9e-8, -6.0e-5 and -5.4e-3, all the wrong sign.
#[test]
fn best_constant_shrunken_beta_fails_at_stated_offset() {
    let verifier = Verifier {
        optimality: ratio_bounds::verify::OptimalityProbe {
            shrink: 1e-6,
            offset: 1e-4,
        },
        ..Verifier::default()
    };
    let report = verifier.best_constant(&[0.5, 1.0, 1.4], TOL);
    let failing: Vec<f64> = report
        .violations
        .iter()
        .filter(|v| v.property == "shrunken constant fails")
        .filter_map(|v| v.inputs.get("alpha"))
        .collect();
    criterion(
        "beta (1 - 1e-6) violated at x = alpha (1 - 1e-4) for alpha in {0.5, 1.0, 1.4}",
        report.passed,
        format!("no violation produced for alpha in {failing:?}"),
    );
}

#[test]
fn families_converge_to_the_ratio() {
    let report = verify_convergence(0.5, 1.0, 30, 1e-9);
    let c = (coshcos_bound(0.5, 1.0, 30).unwrap() - ratio_coshcos(0.5).unwrap()).abs();
    let s = (sinhsin_bound(0.5, 1.0, 30).unwrap() - ratio_sinhsin(0.5).unwrap()).abs();
    criterion(
        "|b_30(0.5, 1) - ratio| <= 1e-9 for both families",
        report.passed && c <= 1e-9 && s <= 1e-9,
        format!("cosh/cos {c:e}, sinh/sin {s:e}"),
    );
}

#[test]
fn product_oracle_matches_direct_ratio() {
    // tail_bound excludes rounding; allow the 4-ulp contract of each side
    let rounding = |v: f64| 8.0 * f64::EPSILON * v;
    let mut ok = true;
    let mut detail = Vec::new();
    for x in [0.3, 0.8, 1.3] {
        let reference = ratio_coshcos(x).unwrap();
        let raw = product_coshcos(x, 100_000).unwrap();
        let corrected = product_coshcos_corrected(x, 100_000).unwrap();
        ok &= raw.value <= reference && reference <= raw.value + raw.tail_bound;
        let err = (corrected.value - reference).abs();
        ok &= err <= corrected.tail_bound + rounding(reference);
        detail.push(format!(
            "x={x}: |corrected - ratio| = {err:.2e} (tail {:.2e})",
            corrected.tail_bound
        ));
    }
    criterion(
        "product expansion with 10^5 factors brackets the ratio",
        ok,
        detail.join("; "),
    );
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ratio-bounds"))
}

#[test]
fn cli_verify_all_passes_and_mutation_is_caught() {
    let start = Instant::now();
    let clean = bin()
        .args(["verify", "--suite", "all", "--grid", "64", "--tol", "1e-12"])
        .env_remove("RATIO_BOUNDS_FAULT")
        .output()
        .unwrap();
    let mutated = bin()
        .args(["verify", "--suite", "all"])
        .env("RATIO_BOUNDS_FAULT", "negate-coshcos-correction")
        .output()
        .unwrap();
    let elapsed = start.elapsed();
    criterion(
        "`verify --suite all` exits 0; sign-flipped cosh/cos correction exits 1",
        clean.status.code() == Some(0)
            && mutated.status.code() == Some(1)
            && elapsed < Duration::from_secs(60),
        format!(
            "clean {:?}, mutated {:?}, {elapsed:?}",
            clean.status.code(),
            mutated.status.code()
        ),
    );
}

#[test]
fn cli_sweep_matches_golden_file() {
    let out = bin()
        .args([
            "sweep",
            "--family",
            "coshcos",
            "--alpha",
            "1.0",
            "--k0-list",
            "-1,0,2",
            "--points",
            "5",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    let golden = include_bytes!("golden/sweep_coshcos_alpha1.csv");
    criterion(
        "sweep output is byte-identical to the golden file",
        out.status.success() && out.stdout == golden,
        format!("{} bytes vs {} golden", out.stdout.len(), golden.len()),
    );
}
