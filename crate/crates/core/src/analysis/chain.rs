use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::midpoint::vertex;
use crate::error::{Error, Result};
use crate::exact::{compute_abs_a, exponent_at, ExactExponent, ParamCombo};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainDirection {
    /// `f` with `u > 0`: values fall towards the midpoint.
    Decreasing,
    /// `g` with `u < 0`: values rise towards the midpoint.
    Increasing,
}

/// Exponents at `1 + delta_i` and `|A| - delta_i` for increasing offsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaChain {
    #[serde(serialize_with = "serialize_rationals")]
    pub deltas: Vec<BigRational>,
    pub values_left: Vec<ExactExponent>,
    pub values_right: Vec<ExactExponent>,
    pub direction: ChainDirection,
    /// `values_left[i] == values_right[i]` for every `i`.
    pub mirror_equal: bool,
    /// Left values strictly move in `direction`.
    pub strictly_monotone: bool,
    /// The last offset equals `theta - 1`, so `1 + delta_n` is the midpoint.
    pub reaches_midpoint: bool,
}

fn serialize_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

/// Mirror chain for `f` (`u > 0`).
pub fn delta_chain(combo: &ParamCombo, deltas: &[BigRational]) -> Result<DeltaChain> {
    if combo.u() <= 0 {
        return Err(Error::WrongSign { expected: "> 0", u: combo.u() });
    }
    build_chain(combo, deltas, ChainDirection::Decreasing)
}

/// Mirror chain for `g` (`u < 0`); every inequality flips relative to `f`.
pub fn mirrored_chain_g(combo: &ParamCombo, deltas: &[BigRational]) -> Result<DeltaChain> {
    if combo.u() >= 0 {
        return Err(Error::WrongSign { expected: "< 0", u: combo.u() });
    }
    build_chain(combo, deltas, ChainDirection::Increasing)
}

fn build_chain(
    combo: &ParamCombo,
    deltas: &[BigRational],
    direction: ChainDirection,
) -> Result<DeltaChain> {
    combo.require_symmetric()?;
    let abs_a = compute_abs_a(combo);
    if abs_a.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let right_end = BigRational::from_integer(abs_a.value.clone());
    // 1 + delta <= |A| - delta
    let limit = (&right_end - BigRational::one()) / BigRational::from_integer(BigInt::from(2));
    for (i, d) in deltas.iter().enumerate() {
        if !d.is_positive() || d > &limit {
            return Err(Error::DeltaOutOfInterval { delta: d.to_string(), limit: limit.to_string() });
        }
        if i > 0 && d <= &deltas[i - 1] {
            return Err(Error::NonIncreasingDeltas { index: i });
        }
    }
    let one = BigRational::one();
    let values_left: Vec<_> = deltas.iter().map(|d| exponent_at(combo, &(&one + d))).collect();
    let values_right: Vec<_> = deltas.iter().map(|d| exponent_at(combo, &(&right_end - d))).collect();
    let mirror_equal = values_left == values_right;
    let strictly_monotone = values_left.windows(2).all(|w| match direction {
        ChainDirection::Decreasing => w[1] < w[0],
        ChainDirection::Increasing => w[1] > w[0],
    });
    let reaches_midpoint = deltas.last().is_some_and(|d| *d == vertex(combo) - &one);
    Ok(DeltaChain {
        deltas: deltas.to_vec(),
        values_left,
        values_right,
        direction,
        mirror_equal,
        strictly_monotone,
        reaches_midpoint,
    })
}
