//! Enumeration and inversion over parameter combinations, partner lookup,
//! and the behaviour of `{f_p(1)}` along sequences of combinations.

mod claims;
mod report;
mod sequence;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    compute_abs_a, exponent_at_int, serialize_bigint, ExactExponent, ParamCombo,
};

pub use claims::{run_claims, ClaimsSummary};
pub use report::{ClaimId, ClaimReport, Verdict, Witness};
pub use sequence::{
    build_increasing_sequence, check_monotone_decrease, tail_in_ball, Ball, BallTail,
    FamilySequence,
};

/// Inclusive upper bounds for grid searches; every lower bound is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridBounds {
    pub k_max: u32,
    pub m_max: u64,
    pub u_max: i64,
}

impl GridBounds {
    pub fn new(k_max: u32, m_max: u64, u_max: i64) -> Self {
        Self { k_max, m_max, u_max }
    }

    /// Standard `N = 2` combinations in lexicographic `(k, m, u)` order.
    pub fn combos(&self) -> impl Iterator<Item = ParamCombo> + '_ {
        (1..=self.k_max).flat_map(move |k| {
            (1..=self.m_max).flat_map(move |m| {
                (1..=self.u_max).filter_map(move |u| ParamCombo::standard(k, m, u).ok())
            })
        })
    }
}

impl Default for GridBounds {
    fn default() -> Self {
        Self { k_max: 4, m_max: 20, u_max: 10 }
    }
}

/// All `N = 2` combinations with `k <= k_max`, `1 <= u <= u_max` and
/// `m · u^(2k-2) = n + 1`, sorted by `(k, m, u)`.
///
/// Never empty for `n >= 1`: `{k=1, m=n+1, u}` qualifies for any `u`.
pub fn invert_target(n: u64, k_max: u32, u_max: i64) -> Vec<ParamCombo> {
    let target = BigInt::from(n) + 1;
    let mut found = Vec::new();
    for k in 1..=k_max {
        for u in 1..=u_max {
            let power = BigInt::from(u).pow(2 * k - 2);
            if power > target {
                break;
            }
            let (m, rem) = target.div_rem(&power);
            if !rem.is_zero() {
                continue;
            }
            if let Some(combo) = u64::try_from(&m).ok().and_then(|m| ParamCombo::standard(k, m, u).ok()) {
                found.push(combo);
            }
        }
    }
    found.sort();
    found
}

/// The natural number `n` with `f(n) = f(1)`; it equals `|A|` and is unique
/// because `Q(x) - Q(1) = (x - 1)(u(x + 1) + v)` has only the roots `1` and `|A|`.
pub fn find_partner(combo: &ParamCombo) -> Result<BigInt> {
    combo.require_symmetric()?;
    let abs_a = compute_abs_a(combo);
    if abs_a.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let at_one = exponent_at_int(combo, &BigInt::one());
    if exponent_at_int(combo, &abs_a.value) != at_one {
        return Err(Error::Postcondition(format!("f(1) != f(|A|) for {combo}")));
    }
    Ok(abs_a.value)
}

/// The `n >= 1` with `f(n) = f(n + 1)`, if any.
///
/// Consecutive arguments share a value only when the vertex `Z/2` sits at
/// `n + 1/2`, i.e. when `Z` is odd and at least 3.
pub fn adjacent_equal_argument(combo: &ParamCombo) -> Option<BigInt> {
    if !combo.is_symmetric() {
        return None;
    }
    let z = combo.z();
    if z.is_even() || z < BigInt::from(3) {
        return None;
    }
    Some((z - 1) / 2)
}

/// One combination with the pair `{f(1), f(partner)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairEntry {
    pub combo: ParamCombo,
    pub exponent_at_1: ExactExponent,
    #[serde(serialize_with = "serialize_opt")]
    pub partner: Option<BigInt>,
    pub degenerate: bool,
    #[serde(serialize_with = "serialize_opt")]
    pub adjacent_equal: Option<BigInt>,
}

fn serialize_opt<S: serde::Serializer>(n: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n {
        Some(n) => serialize_bigint(n, s),
        None => s.serialize_none(),
    }
}

/// Every `N = 2` combination within the bounds, lexicographic in `(k, m, u)`,
/// with its partner (or the degenerate flag when `Z = 1`).
pub fn enumerate_pairs(bounds: &GridBounds) -> Vec<PairEntry> {
    bounds
        .combos()
        .map(|combo| {
            let partner = find_partner(&combo).ok();
            PairEntry {
                exponent_at_1: exponent_at_int(&combo, &BigInt::one()),
                degenerate: partner.is_none(),
                adjacent_equal: adjacent_equal_argument(&combo),
                partner,
                combo,
            }
        })
        .collect()
}
