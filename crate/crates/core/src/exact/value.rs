use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::combo::ParamCombo;
use crate::error::{Error, Result};

/// Exact value of the exponent `u x^2 + v x`; the function value it stands
/// for is `e^exponent`.
///
/// Serialized as `"num/den"`, or just `"num"` when the denominator is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactExponent(BigRational);

impl ExactExponent {
    pub fn new(value: BigRational) -> Self {
        Self(value)
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl From<BigInt> for ExactExponent {
    fn from(n: BigInt) -> Self {
        Self(BigRational::from_integer(n))
    }
}

impl From<i64> for ExactExponent {
    fn from(n: i64) -> Self {
        Self::from(BigInt::from(n))
    }
}

impl FromStr for ExactExponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Self)
    }
}

impl fmt::Display for ExactExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for ExactExponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

/// Parses `"p"`, `"p/q"` or a plain decimal such as `"-2.5"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Domain(format!("not a rational number: {s:?}"));
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int_digits}{frac}").parse().map_err(|_| bad())?;
        let value = BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32));
        return Ok(if neg { -value } else { value });
    }
    let r = BigRational::from_str(s).map_err(|_| bad())?;
    Ok(r)
}

/// Serializes any rational as its exact `"num/den"` string.
pub(crate) fn serialize_rational<S: Serializer>(
    r: &BigRational,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(r)
}

/// Serializes a big integer as a JSON number when it fits in 64 bits, and as
/// a decimal string otherwise.
pub(crate) fn serialize_bigint<S: Serializer>(
    n: &BigInt,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(n) {
        Ok(v) => serializer.serialize_i64(v),
        Err(_) => serializer.collect_str(n),
    }
}

/// A function value `±e^log_value`, kept in log space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QValue {
    pub log_value: ExactExponent,
    pub positive: bool,
}

impl QValue {
    pub fn positive(log_value: ExactExponent) -> Self {
        Self { log_value, positive: true }
    }
}

impl Ord for QValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.positive, other.positive) {
            (true, true) => self.log_value.cmp(&other.log_value),
            (false, false) => other.log_value.cmp(&self.log_value),
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
        }
    }
}

impl PartialOrd for QValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { "" } else { "-" };
        write!(f, "{sign}e^({})", self.log_value)
    }
}

/// Which case of `|1 - Z|` applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AbsABranch {
    /// `Z >= 1`, giving `Z - 1`.
    ZAtLeastOne,
    /// `Z < 1`, giving `1 - Z`.
    ZBelowOne,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbsA {
    #[serde(serialize_with = "serialize_bigint")]
    pub value: BigInt,
    pub branch: AbsABranch,
}

impl AbsA {
    /// `|A| = 0` happens exactly when `Z = 1`.
    pub fn is_degenerate(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Display for AbsA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed>(x: &T) -> Self {
        if x.is_negative() {
            Sign::Negative
        } else if x.is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

/// `|1 - Z|` with the branch recorded. A zero result is flagged via
/// [`AbsA::is_degenerate`], not reported as an error.
pub fn compute_abs_a(combo: &ParamCombo) -> AbsA {
    let z = combo.z();
    let one = BigInt::from(1);
    if z >= one {
        AbsA { value: z - one, branch: AbsABranch::ZAtLeastOne }
    } else {
        AbsA { value: one - z, branch: AbsABranch::ZBelowOne }
    }
}

/// Exactly `u x^2 + v x`.
pub fn exponent_at(combo: &ParamCombo, x: &BigRational) -> ExactExponent {
    let u = BigRational::from_integer(combo.u_big());
    let v = BigRational::from_integer(combo.v());
    ExactExponent((u * x + v) * x)
}

pub(crate) fn exponent_at_int(combo: &ParamCombo, x: &BigInt) -> ExactExponent {
    let u = combo.u_big();
    ExactExponent::from((u * x + combo.v()) * x)
}

pub fn value_at(combo: &ParamCombo, x: &BigRational) -> QValue {
    QValue::positive(exponent_at(combo, x))
}

/// Checks `f(1) = f(|A|)` exactly.
///
/// Requires `N·k` even and `|A| >= 1`. A `false` result means the
/// arithmetic is wrong somewhere, since the identity is a theorem.
pub fn check_symmetry(combo: &ParamCombo) -> Result<bool> {
    combo.require_symmetric()?;
    let abs_a = compute_abs_a(combo);
    if abs_a.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let at_one = exponent_at_int(combo, &BigInt::from(1));
    Ok(at_one == exponent_at_int(combo, &abs_a.value))
}

pub fn compare_values(a: &QValue, b: &QValue) -> Ordering {
    a.cmp(b)
}

/// Sign of `2ux + v`, which is the sign of `f'(x)` because `f > 0`.
pub fn derivative_sign_at(combo: &ParamCombo, x: &BigRational) -> Sign {
    Sign::of(&derivative_factor(combo, x))
}

/// `2ux + v`, the factor with `f'(x) = f(x) (2ux + v)`.
pub fn derivative_factor(combo: &ParamCombo, x: &BigRational) -> BigRational {
    let two_u = BigRational::from_integer(combo.u_big() * 2);
    two_u * x + BigRational::from_integer(combo.v())
}
