use std::cmp::Ordering;

use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform sweep geometry with endpoint inset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGridSpec")]
pub struct GridSpec {
    points_per_axis: usize,
    inset: f64,
    k0_set: Vec<i32>,
}

#[derive(Deserialize)]
struct RawGridSpec {
    points_per_axis: usize,
    inset: f64,
    k0_set: Vec<i32>,
}

impl TryFrom<RawGridSpec> for GridSpec {
    type Error = Error;

    fn try_from(raw: RawGridSpec) -> Result<Self> {
        GridSpec::new(raw.points_per_axis, raw.inset, raw.k0_set)
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            points_per_axis: 64,
            inset: 1e-3,
            k0_set: (-1..=8).collect(),
        }
    }
}

impl GridSpec {
    /// The inset must stay below the half-width of the narrowest swept
    /// interval, (0, 1).
    pub fn new(points_per_axis: usize, inset: f64, k0_set: Vec<i32>) -> Result<Self> {
        if points_per_axis == 0 {
            return Err(Error::Config("points_per_axis must be at least 1".into()));
        }
        if !(inset > 0.0 && inset < 0.5) {
            return Err(Error::Config(format!("inset {inset} is outside (0, 0.5)")));
        }
        if k0_set.is_empty() {
            return Err(Error::Config("k0_set is empty".into()));
        }
        if !k0_set.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Config("k0_set must be strictly increasing".into()));
        }
        for &k0 in &k0_set {
            crate::error::refinement_level(k0)?;
        }
        Ok(Self {
            points_per_axis,
            inset,
            k0_set,
        })
    }

    pub fn with_points(points_per_axis: usize) -> Result<Self> {
        let d = Self::default();
        Self::new(points_per_axis, d.inset, d.k0_set)
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    pub fn inset(&self) -> f64 {
        self.inset
    }

    pub fn k0_set(&self) -> &[i32] {
        &self.k0_set
    }

    /// `points_per_axis` uniform points on `[lo + inset, hi - inset]`; a
    /// single point sits at the midpoint.
    pub fn axis(&self, lo: f64, hi: f64) -> Vec<f64> {
        inset_axis(lo, hi, self.points_per_axis, self.inset)
    }
}

pub(crate) fn inset_axis(lo: f64, hi: f64, n: usize, inset: f64) -> Vec<f64> {
    if n == 1 {
        return vec![0.5 * (lo + hi)];
    }
    let a = lo + inset;
    let span = (hi - inset) - a;
    (0..n)
        .map(|i| a + span * (i as f64) / ((n - 1) as f64))
        .collect()
}

/// Named inputs of one sweep case, in a fixed order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CaseInputs(Vec<(&'static str, f64)>);

impl CaseInputs {
    pub fn new(fields: &[(&'static str, f64)]) -> Self {
        Self(fields.to_vec())
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.0.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }

    pub fn fields(&self) -> &[(&'static str, f64)] {
        &self.0
    }

    fn lexicographic(&self, other: &Self) -> Ordering {
        for ((_, a), (_, b)) in self.0.iter().zip(&other.0) {
            match a.total_cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl Serialize for CaseInputs {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, value) in &self.0 {
            map.serialize_entry(name, value)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub inputs: CaseInputs,
    pub margin: f64,
    /// Which property of the check failed.
    pub property: &'static str,
}

/// Outcome of one sweep.
///
/// Margins are "bound minus reference" in the scale of the check: absolute
/// for log-scale quantities, divided by `max(1, reference)` for ratio-scale
/// quantities. `worst_margin` is the smallest margin observed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub grid: GridSpec,
    pub cases_run: usize,
    pub worst_margin: f64,
    pub worst_case_inputs: CaseInputs,
    pub violations: Vec<Violation>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn summary_line(&self) -> String {
        format!(
            "{} {} cases={} worst_margin={:e} violations={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.check_name,
            self.cases_run,
            self.worst_margin,
            self.violations.len()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Strictness {
    /// Margin may dip to `-tol`.
    Tolerant,
    /// Margin must be positive.
    Strict,
}

#[derive(Debug, Clone)]
pub(crate) struct Check {
    pub property: &'static str,
    pub margin: f64,
    pub strictness: Strictness,
}

impl Check {
    pub fn tolerant(property: &'static str, margin: f64) -> Self {
        Self {
            property,
            margin,
            strictness: Strictness::Tolerant,
        }
    }

    pub fn strict(property: &'static str, margin: f64) -> Self {
        Self {
            property,
            margin,
            strictness: Strictness::Strict,
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Case {
    pub inputs: CaseInputs,
    pub checks: Vec<Check>,
}

/// Sequential, order-independent reduction of evaluated cases.
pub(crate) fn reduce(
    check_name: &str,
    grid: GridSpec,
    tol: f64,
    cases: impl IntoIterator<Item = Case>,
) -> VerificationReport {
    let mut cases_run = 0;
    let mut worst: Option<(f64, CaseInputs)> = None;
    let mut violations = Vec::new();
    for case in cases {
        cases_run += 1;
        for check in &case.checks {
            // NaN counts as the worst possible margin
            let margin = if check.margin.is_nan() {
                f64::NEG_INFINITY
            } else {
                check.margin
            };
            let violated = match check.strictness {
                Strictness::Tolerant => margin < -tol,
                Strictness::Strict => margin <= 0.0,
            };
            if violated {
                violations.push(Violation {
                    inputs: case.inputs.clone(),
                    margin: check.margin,
                    property: check.property,
                });
            }
            let replace = match &worst {
                None => true,
                Some((m, inputs)) => match margin.total_cmp(m) {
                    Ordering::Less => true,
                    Ordering::Equal => case.inputs.lexicographic(inputs) == Ordering::Less,
                    Ordering::Greater => false,
                },
            };
            if replace {
                worst = Some((margin, case.inputs.clone()));
            }
        }
    }
    let (worst_margin, worst_case_inputs) = worst.unwrap_or((f64::INFINITY, CaseInputs::default()));
    VerificationReport {
        check_name: check_name.to_string(),
        grid,
        cases_run,
        worst_margin,
        worst_case_inputs,
        passed: violations.is_empty(),
        violations,
    }
}
