use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::combo::ParamCombo;
use super::value::{derivative_factor, exponent_at, serialize_rational, ExactExponent, Sign};
use crate::enclosure;
use crate::error::Result;

/// A real number `coeff · e^exponent` with exact rational parts.
///
/// Covers plain rationals (`exponent = 0`), function values (`coeff = 1`)
/// and derivative values `f'(x) = (2ux + v) e^Q(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScaledExp {
    #[serde(serialize_with = "serialize_rational")]
    pub coeff: BigRational,
    pub exponent: ExactExponent,
}

impl ScaledExp {
    pub fn new(coeff: BigRational, exponent: ExactExponent) -> Self {
        Self { coeff, exponent }
    }

    pub fn rational(value: BigRational) -> Self {
        Self::new(value, ExactExponent::zero())
    }

    /// `f'(x)` for the given combination.
    pub fn derivative(combo: &ParamCombo, x: &BigRational) -> Self {
        Self::new(derivative_factor(combo, x), exponent_at(combo, x))
    }

    pub fn sign(&self) -> Sign {
        Sign::of(&self.coeff)
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        Self::new(&self.coeff * by, self.exponent.clone())
    }

    /// Exact ordering of the two reals.
    ///
    /// Same-sign magnitudes compare `ln(|c1| / |c2|)` against `q2 - q1` with a
    /// refined enclosure of the logarithm.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        let (s1, s2) = (self.sign(), other.sign());
        if s1 != s2 {
            return Ok(s1.cmp(&s2));
        }
        if s1 == Sign::Zero {
            return Ok(Ordering::Equal);
        }
        let ratio = (self.coeff.abs()) / other.coeff.abs();
        let gap = other.exponent.value() - self.exponent.value();
        let magnitude = if gap.is_zero() {
            ratio.cmp(&BigRational::from_integer(1.into()))
        } else {
            enclosure::cmp_ln(&ratio, &gap)?
        };
        Ok(if s1 == Sign::Negative { magnitude.reverse() } else { magnitude })
    }
}

impl fmt::Display for ScaledExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent.value().is_zero() {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*e^({})", self.coeff, self.exponent)
        }
    }
}
