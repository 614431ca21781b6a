//! Command-line front end: `eval`, `verify` and `sweep`.
//!
//! Exit codes: 0 on success (and when every verification passed), 1 when a
//! verification found a violation, 2 on usage or domain errors.

use std::f64::consts::FRAC_PI_2;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{
    bernoulli_log_bound, best_exp_constant, coshcos_bound_with, coshcos_limit_bound, exp_envelope,
    sinhsin_bound, CoshCosOptions, EvalResult, Family, LemmaQuery,
};
use crate::error::{Error, Result};
use crate::oracle::{ratio_coshcos, ratio_sinhsin};
use crate::series::{lambda_sum_closed_with, log_ratio_unchecked, SeriesConfig};
use crate::verify::{GridSpec, Suite, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Fault injection for mutation checks of the verification suite. Setting
/// it to `negate-coshcos-correction` flips the sign of the correction sum in
/// the cosh/cos family.
pub const FAULT_ENV: &str = "RATIO_BOUNDS_FAULT";

#[derive(Debug, Parser)]
#[command(
    name = "ratio-bounds",
    version,
    about = "Evaluate and verify upper bounds for cosh x/cos x and sinh x/sin x"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one bound at a point and print it as JSON
    Eval {
        #[command(subcommand)]
        target: EvalTarget,
    },
    /// Run verification sweeps
    Verify(VerifyArgs),
    /// Emit bound and reference values along (0, alpha)
    Sweep(SweepArgs),
}

#[derive(Debug, Subcommand)]
pub enum EvalTarget {
    /// Bernoulli-type bound on ln((1+uv)/(1-uv))
    Lemma {
        #[arg(long)]
        u: f64,
        #[arg(long)]
        v: f64,
        #[arg(long, allow_negative_numbers = true)]
        k0: i32,
    },
    /// cosh x / cos x family
    Coshcos {
        #[arg(long)]
        x: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        k0: i32,
    },
    /// sinh x / sin x family
    Sinhsin {
        #[arg(long)]
        x: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        k0: i32,
    },
    /// ((pi^2+4x^2)/(pi^2-4x^2))^(pi^2/8)
    Limit {
        #[arg(long)]
        x: f64,
    },
    /// exp(beta x^2) with the best constant for alpha
    Envelope {
        #[arg(long)]
        x: f64,
        #[arg(long)]
        alpha: f64,
    },
    /// Best exponential constant ln(cosh alpha/cos alpha)/alpha^2
    Beta {
        #[arg(long)]
        alpha: f64,
    },
    /// I_k = sum (2n-1)^-(4k+2) from the zeta closed form
    Lambda {
        #[arg(long)]
        k: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Lemma,
    AMonotone,
    Ratio,
    Limit,
    Convergence,
    BestConstant,
    Lambda,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Lemma => Suite::Lemma,
            SuiteArg::AMonotone => Suite::AMonotone,
            SuiteArg::Ratio => Suite::Ratio,
            SuiteArg::Limit => Suite::Limit,
            SuiteArg::Convergence => Suite::Convergence,
            SuiteArg::BestConstant => Suite::BestConstant,
            SuiteArg::Lambda => Suite::Lambda,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    /// Points per axis of the two-dimensional sweeps
    #[arg(long, default_value_t = 64)]
    pub grid: usize,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Write the reports to this file as a JSON array
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Coshcos,
    Sinhsin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Comma-separated refinement levels, -1 allowed
    #[arg(
        long = "k0-list",
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "-1,0,1,2"
    )]
    pub k0_list: Vec<i32>,
    #[arg(long, default_value_t = 9)]
    pub points: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

/// Options read from the environment.
#[derive(Debug, Clone, Copy, Default)]
pub struct Environment {
    pub series: SeriesConfig,
    pub coshcos: CoshCosOptions,
}

impl Environment {
    pub fn from_env() -> Result<Self> {
        let series = SeriesConfig::from_env()?;
        let mut coshcos = CoshCosOptions::default();
        if let Ok(fault) = std::env::var(FAULT_ENV) {
            match fault.as_str() {
                "negate-coshcos-correction" => coshcos.negate_correction = true,
                "" => {}
                other => {
                    return Err(Error::Config(format!(
                        "unknown {FAULT_ENV} value {other:?}"
                    )))
                }
            }
        }
        Ok(Self { series, coshcos })
    }
}

/// Parse `args` (including the program name) and run, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let env = match Environment::from_env() {
        Ok(env) => env,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = match &cli.command {
        Command::Eval { target } => cmd_eval(target, &env).map(|r| {
            let _ = writeln!(out, "{}", serde_json::to_string(&r).expect("finite JSON"));
            EXIT_OK
        }),
        Command::Verify(args) => cmd_verify(args, &env, out),
        Command::Sweep(args) => cmd_sweep(args, &env).map(|text| {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn cmd_eval(target: &EvalTarget, env: &Environment) -> Result<EvalResult> {
    Ok(match *target {
        EvalTarget::Lemma { u, v, k0 } => {
            let q = LemmaQuery::new(u, v, k0)?;
            EvalResult::against(bernoulli_log_bound(&q)?, log_ratio_unchecked(u * v))
        }
        EvalTarget::Coshcos { x, alpha, k0 } => EvalResult::against(
            coshcos_bound_with(x, alpha, k0, &env.coshcos)?,
            ratio_coshcos(x)?,
        ),
        EvalTarget::Sinhsin { x, alpha, k0 } => {
            EvalResult::against(sinhsin_bound(x, alpha, k0)?, ratio_sinhsin(x)?)
        }
        EvalTarget::Limit { x } => EvalResult::against(coshcos_limit_bound(x)?, ratio_coshcos(x)?),
        EvalTarget::Envelope { x, alpha } => {
            EvalResult::against(exp_envelope(x, alpha)?, ratio_coshcos(x)?)
        }
        EvalTarget::Beta { alpha } => EvalResult::bare(best_exp_constant(alpha)?),
        EvalTarget::Lambda { k } => EvalResult::bare(lambda_sum_closed_with(k, &env.series)?.value),
    })
}

/// Runs the requested sweeps, writes the reports if `--out` is given and
/// prints one summary line per report.
pub fn cmd_verify(args: &VerifyArgs, env: &Environment, out: &mut dyn Write) -> Result<i32> {
    let grid = GridSpec::with_points(args.grid)?;
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return Err(Error::Config(format!(
            "--tol must be positive, got {}",
            args.tol
        )));
    }
    let verifier = Verifier {
        series: env.series,
        coshcos: env.coshcos,
        ..Verifier::default()
    };
    let reports = verifier.run(args.suite.into(), &grid, args.tol);
    if let Some(path) = &args.out {
        let json = serde_json::to_string_pretty(&reports).expect("reports serialize");
        fs::write(path, json + "\n")
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
    }
    for r in &reports {
        let _ = writeln!(out, "{}", r.summary_line());
    }
    Ok(if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

#[derive(Debug, Serialize)]
struct SweepTable {
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

/// Sweep table as CSV or JSON text, rows at `x = alpha i / (points + 1)`.
pub fn cmd_sweep(args: &SweepArgs, env: &Environment) -> Result<String> {
    let alpha = args.alpha;
    crate::error::open_interval("alpha", alpha, 0.0, FRAC_PI_2, "(0, pi/2)")?;
    if args.points == 0 {
        return Err(Error::Config("--points must be at least 1".into()));
    }
    if args.k0_list.is_empty() {
        return Err(Error::Config("--k0-list is empty".into()));
    }
    for &k0 in &args.k0_list {
        crate::error::refinement_level(k0)?;
    }
    let family = match args.family {
        FamilyArg::Coshcos => Family::CoshCos,
        FamilyArg::Sinhsin => Family::SinhSin,
    };

    let mut columns = vec!["x".to_string(), "reference".to_string()];
    columns.extend(args.k0_list.iter().map(|k0| format!("b_k{k0}")));
    if family == Family::CoshCos {
        columns.push("limit".into());
        columns.push("envelope".into());
    }

    let mut rows = Vec::with_capacity(args.points);
    for i in 1..=args.points {
        let x = alpha * i as f64 / (args.points + 1) as f64;
        let mut row = vec![x, family.reference(x)?];
        for &k0 in &args.k0_list {
            row.push(match family {
                Family::CoshCos => coshcos_bound_with(x, alpha, k0, &env.coshcos)?,
                Family::SinhSin => sinhsin_bound(x, alpha, k0)?,
            });
        }
        if family == Family::CoshCos {
            row.push(coshcos_limit_bound(x)?);
            row.push(exp_envelope(x, alpha)?);
        }
        rows.push(row);
    }

    Ok(match args.format {
        Format::Json => {
            serde_json::to_string(&SweepTable { columns, rows }).expect("finite JSON") + "\n"
        }
        Format::Csv => {
            let mut text = columns.join(",");
            text.push('\n');
            for row in &rows {
                let cells: Vec<String> = row.iter().map(|&v| significant_17(v)).collect();
                text.push_str(&cells.join(","));
                text.push('\n');
            }
            text
        }
    })
}

/// Positional rendering with 17 significant digits (scientific outside
/// `1e-5 ..= 1e16`).
pub fn significant_17(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{v:.16e}");
    let exponent: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("formatted exponent");
    if (-5..=16).contains(&exponent) {
        format!("{:.*}", (16 - exponent) as usize, v)
    } else {
        sci
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["ratio-bounds"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn significant_digits() {
        assert_eq!(significant_17(0.5), "0.50000000000000000");
        assert_eq!(significant_17(0.1), "0.10000000000000001");
        assert_eq!(significant_17(12.5), "12.500000000000000");
        assert_eq!(significant_17(1e-7), "9.9999999999999995e-8");
        assert_eq!(significant_17(0.0), "0");
    }

    #[test]
    fn eval_lemma_json() {
        let (code, out, _) = run_args(&["eval", "lemma", "--u", "0.5", "--v", "0.5", "--k0", "-1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["bound"].as_f64().unwrap() - 0.549_306_144_334_054_8).abs() < 1e-15);
        assert!((v["margin"].as_f64().unwrap() - 0.038_480_520_568_064_1).abs() < 1e-12);
    }

    #[test]
    fn eval_beta_has_no_reference() {
        let (code, out, _) = run_args(&["eval", "beta", "--alpha", "1.0"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v.get("reference").is_none() && v.get("margin").is_none());
    }

    #[test]
    fn eval_domain_error_is_usage() {
        let (code, _, err) = run_args(&[
            "eval", "coshcos", "--x", "1.0", "--alpha", "1.0", "--k0", "0",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("strictly less"), "{err}");
    }

    #[test]
    fn bad_flags_are_usage() {
        assert_eq!(run_args(&["eval", "lemma", "--u", "abc"]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["verify", "--suite", "all", "--grid", "0"]).0, 2);
        assert_eq!(
            run_args(&["verify", "--suite", "lambda", "--tol", "-1"]).0,
            2
        );
        assert_eq!(
            run_args(&["sweep", "--family", "coshcos", "--k0-list", "-2"]).0,
            2
        );
        assert_eq!(
            run_args(&["sweep", "--family", "coshcos", "--alpha", "2"]).0,
            2
        );
    }

    #[test]
    fn help_is_success() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }

    #[test]
    fn sweep_shapes() {
        let (code, out, _) = run_args(&[
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
        ]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "x,reference,b_k-1,b_k0,b_k2,limit,envelope");
        assert_eq!(lines.len(), 6);
        assert!(lines[1..].iter().all(|l| l.split(',').count() == 7));

        let (_, out, _) = run_args(&[
            "sweep",
            "--family",
            "sinhsin",
            "--k0-list",
            "0",
            "--points",
            "3",
        ]);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "x,reference,b_k0");
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn sweep_json() {
        let (code, out, _) = run_args(&[
            "sweep",
            "--family",
            "sinhsin",
            "--k0-list",
            "-1,1",
            "--points",
            "2",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["columns"].as_array().unwrap().len(), 4);
        assert_eq!(v["rows"].as_array().unwrap().len(), 2);
    }
}
