use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    compute_abs_a, derivative_sign_at, exponent_at, serialize_bigint, serialize_rational,
    ExactExponent, ParamCombo, Sign,
};

/// Vertex `theta` of the exponent, where `f'(theta) = 0`, together with the
/// interval `[1, |A|]` it bisects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Midpoint {
    #[serde(serialize_with = "serialize_rational")]
    pub theta: BigRational,
    #[serde(serialize_with = "serialize_bigint")]
    pub left: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub right: BigInt,
}

/// `|A|` for a combination that admits a nondegenerate interval `[1, |A|]`.
pub(crate) fn interval_end(combo: &ParamCombo) -> Result<BigInt> {
    combo.require_symmetric()?;
    let abs_a = compute_abs_a(combo).value;
    if abs_a < BigInt::from(2) {
        return Err(Error::DegenerateInterval { abs_a });
    }
    Ok(abs_a)
}

/// `theta = -v / 2u`, the only zero of `2ux + v`.
pub fn vertex(combo: &ParamCombo) -> BigRational {
    BigRational::new(-combo.v(), BigInt::from(combo.u()) * 2)
}

pub fn midpoint(combo: &ParamCombo) -> Result<Midpoint> {
    let abs_a = interval_end(combo)?;
    let theta = vertex(combo);
    let centre = BigRational::new(&abs_a + 1, BigInt::from(2));
    if theta != centre {
        return Err(Error::Postcondition(format!(
            "vertex {theta} is not the centre {centre} of [1, {abs_a}]"
        )));
    }
    if derivative_sign_at(combo, &theta) != Sign::Zero {
        return Err(Error::Postcondition(format!("f'({theta}) != 0")));
    }
    Ok(Midpoint { theta, left: BigInt::one(), right: abs_a })
}

/// Closed form `-m^2 u^(2Nk-3) / 4` for the exponent at the vertex, checked
/// against direct evaluation at `theta`.
pub fn midpoint_value_exponent(combo: &ParamCombo) -> Result<ExactExponent> {
    let mid = midpoint(combo)?;
    let m = BigInt::from(combo.m());
    let power = BigInt::from(combo.u()).pow((2 * combo.nk() - 3) as u32);
    let closed = ExactExponent::new(BigRational::new(-(&m * &m) * power, BigInt::from(4)));
    let direct = exponent_at(combo, &mid.theta);
    if closed != direct {
        return Err(Error::Postcondition(format!(
            "closed form {closed} differs from exponent {direct} at theta"
        )));
    }
    Ok(closed)
}
