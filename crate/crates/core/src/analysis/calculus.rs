//! Instance checks of Rolle's and Darboux's theorems on `[1, |A|]`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::midpoint::{interval_end, vertex};
use crate::error::{Error, Result};
use crate::exact::{
    derivative_factor, derivative_sign_at, exponent_at, serialize_rational, ParamCombo, ScaledExp,
    Sign,
};

/// Interior sample points per side in [`verify_rolle`].
const ROLLE_SAMPLES_PER_SIDE: u32 = 4;

/// Default bracket width for [`verify_darboux`]: `10^-9`.
pub fn default_bisection_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RolleSample {
    #[serde(serialize_with = "serialize_rational")]
    pub x: BigRational,
    pub sign: Sign,
    pub expected: Sign,
    /// `(Q(x + h) - Q(x - h)) / 2h`.
    #[serde(serialize_with = "serialize_rational")]
    pub central_difference: BigRational,
    /// `Q'(x) = 2ux + v`.
    #[serde(serialize_with = "serialize_rational")]
    pub derivative: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RolleReport {
    #[serde(serialize_with = "serialize_rational")]
    pub theta: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub h: BigRational,
    pub samples: Vec<RolleSample>,
    /// `f'` has the sign pattern of a Rolle point at `theta` on every sample.
    pub sign_pattern_holds: bool,
    /// The central difference of the exponent equals `2ux + v` exactly at
    /// every sample.
    pub finite_difference_exact: bool,
}

/// Central difference of the exponent, exact for any quadratic.
pub fn central_difference(combo: &ParamCombo, x: &BigRational, h: &BigRational) -> BigRational {
    let ahead = exponent_at(combo, &(x + h)).into_inner();
    let behind = exponent_at(combo, &(x - h)).into_inner();
    (ahead - behind) / (h * BigRational::from_integer(BigInt::from(2)))
}

pub fn verify_rolle(combo: &ParamCombo, h: &BigRational) -> Result<RolleReport> {
    if !h.is_positive() {
        return Err(Error::Domain(format!("step must be positive, got {h}")));
    }
    let right = BigRational::from_integer(interval_end(combo)?);
    let left = BigRational::one();
    let theta = vertex(combo);
    // f' < 0 before theta when u > 0; the mirrored family flips both sides
    let (before, after) = if combo.u() > 0 {
        (Sign::Negative, Sign::Positive)
    } else {
        (Sign::Positive, Sign::Negative)
    };

    let mut points: Vec<(BigRational, Sign)> = Vec::new();
    let parts = BigRational::from_integer(BigInt::from(ROLLE_SAMPLES_PER_SIDE));
    for j in 1..ROLLE_SAMPLES_PER_SIDE {
        let frac = BigRational::from_integer(BigInt::from(j)) / &parts;
        points.push((&left + (&theta - &left) * &frac, before));
        points.push((&theta + (&right - &theta) * &frac, after));
    }
    if &theta - h > left {
        points.push((&theta - h, before));
    }
    if &theta + h < right {
        points.push((&theta + h, after));
    }
    points.push((theta.clone(), Sign::Zero));
    points.sort_by(|a, b| a.0.cmp(&b.0));
    points.dedup_by(|a, b| a.0 == b.0);

    let samples: Vec<RolleSample> = points
        .into_iter()
        .map(|(x, expected)| RolleSample {
            sign: derivative_sign_at(combo, &x),
            expected,
            central_difference: central_difference(combo, &x, h),
            derivative: derivative_factor(combo, &x),
            x,
        })
        .collect();
    let sign_pattern_holds = samples.iter().all(|s| s.sign == s.expected);
    let finite_difference_exact = samples.iter().all(|s| s.central_difference == s.derivative);
    Ok(RolleReport { theta, h: h.clone(), samples, sign_pattern_holds, finite_difference_exact })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subinterval {
    /// `[1, theta]`
    LeftOfMidpoint,
    /// `[theta, |A|]`
    RightOfMidpoint,
}

/// Bracket `[lo, hi]` on which `f' - beta` changes sign, or a point where
/// `f'` equals `beta` exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DarbouxWitness {
    pub subinterval: Subinterval,
    #[serde(serialize_with = "serialize_rational")]
    pub lo: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub hi: BigRational,
    /// Midpoint of the bracket, or the exact hit.
    #[serde(serialize_with = "serialize_rational")]
    pub x: BigRational,
    pub exact: bool,
    pub iterations: u32,
}

fn between(value: &ScaledExp, a: &ScaledExp, b: &ScaledExp) -> Result<bool> {
    let lo_side = value.try_cmp(a)?;
    let hi_side = value.try_cmp(b)?;
    Ok(lo_side != hi_side || lo_side == Ordering::Equal)
}

/// Finds where `f'` crosses `beta` inside `[1, theta]` or `[theta, |A|]`.
///
/// `beta` must lie between `f'(1)` and `f'(theta) = 0`, or between `0` and
/// `f'(|A|)`; endpoints count. Bisection runs on exact rationals until the
/// bracket is no wider than `tolerance`.
pub fn verify_darboux(
    combo: &ParamCombo,
    beta: &ScaledExp,
    tolerance: &BigRational,
) -> Result<DarbouxWitness> {
    if !tolerance.is_positive() {
        return Err(Error::Domain(format!("tolerance must be positive, got {tolerance}")));
    }
    let right = BigRational::from_integer(interval_end(combo)?);
    let theta = vertex(combo);
    let one = BigRational::one();
    let d_one = ScaledExp::derivative(combo, &one);
    let d_theta = ScaledExp::rational(BigRational::zero());
    let d_right = ScaledExp::derivative(combo, &right);

    let (subinterval, mut lo, mut hi) = if between(beta, &d_one, &d_theta)? {
        (Subinterval::LeftOfMidpoint, one, theta)
    } else if between(beta, &d_theta, &d_right)? {
        (Subinterval::RightOfMidpoint, theta, right)
    } else {
        return Err(Error::OutOfRange);
    };

    let exact = |x: BigRational, iterations| DarbouxWitness {
        subinterval,
        lo: x.clone(),
        hi: x.clone(),
        x,
        exact: true,
        iterations,
    };
    let lo_side = ScaledExp::derivative(combo, &lo).try_cmp(beta)?;
    if lo_side == Ordering::Equal {
        return Ok(exact(lo, 0));
    }
    if ScaledExp::derivative(combo, &hi).try_cmp(beta)? == Ordering::Equal {
        return Ok(exact(hi, 0));
    }

    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut iterations = 0;
    while &hi - &lo > *tolerance {
        iterations += 1;
        let mid = (&lo + &hi) * &half;
        match ScaledExp::derivative(combo, &mid).try_cmp(beta)? {
            Ordering::Equal => return Ok(exact(mid, iterations)),
            side if side == lo_side => lo = mid,
            _ => hi = mid,
        }
    }
    let x = (&lo + &hi) * &half;
    Ok(DarbouxWitness { subinterval, lo, hi, x, exact: false, iterations })
}
