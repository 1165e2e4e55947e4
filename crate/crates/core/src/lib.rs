//! Exact arithmetic for the quadratic exponential family
//! `f(x) = exp(u x^2 + v x)` with `v = (-1)^(Nk-1) m u^(Nk-1)`.
//!
//! Function values are never materialized as floats. A value `e^E` is carried
//! as its exact rational exponent `E`, so equalities such as `f(1) = f(|A|)`
//! and orderings of `f_p(1)` are decided exactly even when `e^E` would
//! underflow any floating-point type.
//!
//! - [`exact`]: parameter combinations, `|A|`, exponents, values, signs.
//! - [`family`]: inversion, partners, sequences of combinations, claim reports.
//! - [`analysis`]: midpoint, mirror chains, distances, Rolle/Darboux checks.
//! - [`enclosure`]: certified rational enclosures of `ln` and `exp`.
//! - [`cli`]: the command surface and CSV/JSON emitters behind the `quadexp` binary.
//!
//! ```
//! use quadexp::exact::{check_symmetry, compute_abs_a, ParamCombo};
//!
//! let combo = ParamCombo::standard(3, 10, 8).unwrap();
//! assert_eq!(compute_abs_a(&combo).value, 40959.into());
//! assert_eq!(check_symmetry(&combo), Ok(true));
//! ```

pub mod analysis;
pub mod cli;
pub mod enclosure;
pub mod error;
pub mod exact;
pub mod family;

pub use error::{Error, Result};
