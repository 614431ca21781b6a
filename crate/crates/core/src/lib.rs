//! Certified upper bounds for `cosh x / cos x` and `sinh x / sin x`.
//!
//! The crate evaluates a family of bounds obtained by refining the
//! Bernoulli-type inequality
//!
//! ```text
//! ln((1+uv)/(1-uv)) <= 2 sum_{k=0}^{k0} v^(2k+1) [u^(2k+1) - u^(2k0+3)] / (2k+1)
//!                      + u^(2k0+3) ln((1+v)/(1-v))
//! ```
//!
//! and applying it factor by factor to the infinite product expansions of
//! the ratio functions. Alongside the bounds it ships the machinery needed
//! to check them: accurate reference values, truncated series with rigorous
//! tail bounds, and grid sweeps that produce structured reports.
//!
//! ```
//! use ratio_bounds::bounds::coshcos_bound;
//! use ratio_bounds::oracle::ratio_coshcos;
//!
//! let b0 = coshcos_bound(0.5, 1.0, 0).unwrap();
//! assert!(b0 >= ratio_coshcos(0.5).unwrap());
//! ```

pub mod bounds;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod series;
pub mod verify;

pub use error::{Error, Result};

/// Largest refinement level accepted by the bound families. Past roughly
/// 30 the leading power `(x/alpha)^(4k0+6)` underflows and the bounds stop
/// changing.
pub const K0_MAX: i32 = 64;
