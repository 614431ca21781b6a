use thiserror::Error;

/// Errors raised by the evaluation API.
///
/// Verification sweeps never return these for failed inequalities; a
/// violated bound is recorded in the report instead.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("x = {x} must be strictly less than alpha = {alpha}")]
    Ordering { x: f64, alpha: f64 },

    #[error("refinement level {0} is outside -1..={max}", max = crate::K0_MAX)]
    RefinementLevel(i32),

    #[error("series tail could not be pushed below {target:e} within {max_terms} terms")]
    Accuracy { target: f64, max_terms: usize },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Checks `lo < value < hi`; NaN is rejected.
pub(crate) fn open_interval(
    name: &'static str,
    value: f64,
    lo: f64,
    hi: f64,
    domain: &'static str,
) -> Result<()> {
    if value > lo && value < hi {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value,
            domain,
        })
    }
}

pub(crate) fn refinement_level(k0: i32) -> Result<()> {
    if (-1..=crate::K0_MAX).contains(&k0) {
        Ok(())
    } else {
        Err(Error::RefinementLevel(k0))
    }
}
