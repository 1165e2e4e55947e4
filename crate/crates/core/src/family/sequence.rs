use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::report::{ClaimId, ClaimReport, Witness};
use crate::enclosure::{self, Interval};
use crate::error::{Error, Result};
use crate::exact::{compute_abs_a, exponent_at, exponent_at_int, ExactExponent, ParamCombo};

/// Combinations ordered by strictly increasing `|A_p|`, with `f_p(1)` cached
/// as exact exponents. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySequence {
    combos: Vec<ParamCombo>,
    #[serde(serialize_with = "serialize_bigints")]
    abs_a_values: Vec<BigInt>,
    exponents_at_1: Vec<ExactExponent>,
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|n| n.to_string()))
}

impl FamilySequence {
    pub fn combos(&self) -> &[ParamCombo] {
        &self.combos
    }

    pub fn abs_a_values(&self) -> &[BigInt] {
        &self.abs_a_values
    }

    pub fn exponents_at_1(&self) -> &[ExactExponent] {
        &self.exponents_at_1
    }

    pub fn len(&self) -> usize {
        self.combos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.combos.is_empty()
    }

    /// Exponents of `f_p` at its partner `|A_p|`, evaluated directly rather
    /// than copied from `f_p(1)`.
    pub fn partner_exponents(&self) -> Vec<ExactExponent> {
        self.combos
            .iter()
            .zip(&self.abs_a_values)
            .map(|(c, a)| exponent_at_int(c, a))
            .collect()
    }

    fn describe(&self) -> String {
        let items: Vec<String> = self.combos.iter().map(ToString::to_string).collect();
        format!("sequence [{}]", items.join(", "))
    }
}

/// Sorts the combinations by `|A|` ascending.
///
/// Every combination needs `N·k` even; two combinations with the same `|A|`
/// are rejected since their relative order would be arbitrary.
pub fn build_increasing_sequence(combos: &[ParamCombo]) -> Result<FamilySequence> {
    let mut keyed = Vec::with_capacity(combos.len());
    for combo in combos {
        combo.require_symmetric()?;
        keyed.push((compute_abs_a(combo).value, *combo));
    }
    keyed.sort();
    for pair in keyed.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(Error::DuplicateAbsA { abs_a: pair[0].0.clone() });
        }
    }
    let one = BigRational::one();
    let exponents_at_1 = keyed.iter().map(|(_, c)| exponent_at(c, &one)).collect();
    let (abs_a_values, combos) = keyed.into_iter().unzip();
    Ok(FamilySequence { combos, abs_a_values, exponents_at_1 })
}

/// Tests whether `f_p(1)` strictly decreases along the sequence.
///
/// Every adjacent pair that fails contributes two witnesses. With `u` held
/// fixed the claim holds; once `u` varies between neighbours it can fail.
pub fn check_monotone_decrease(seq: &FamilySequence) -> ClaimReport {
    let mut witnesses = Vec::new();
    for p in 1..seq.len() {
        if seq.exponents_at_1[p] >= seq.exponents_at_1[p - 1] {
            witnesses.push(Witness::at_one(&seq.combos[p - 1]));
            witnesses.push(Witness::at_one(&seq.combos[p]));
        }
    }
    ClaimReport::from_witnesses(ClaimId::MonotoneDecrease, seq.describe(), witnesses)
}

/// Open ball `{b > 0 : b < sigma}` around 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    sigma: BigRational,
}

impl Ball {
    pub fn new(sigma: BigRational) -> Result<Self> {
        if !sigma.is_positive() {
            return Err(Error::Domain(format!("ball radius must be positive, got {sigma}")));
        }
        Ok(Self { sigma })
    }

    pub fn sigma(&self) -> &BigRational {
        &self.sigma
    }

    /// Whether `e^exponent < sigma`, decided exactly.
    pub fn contains_exp(&self, exponent: &ExactExponent) -> Result<bool> {
        Ok(enclosure::cmp_ln(&self.sigma, exponent.value())? == Ordering::Greater)
    }

    /// Enclosure of `ln sigma` at the given precision.
    pub fn ln_sigma(&self, bits: u64) -> Interval {
        enclosure::ln(&self.sigma, bits).expect("sigma is positive")
    }
}

/// Result of [`tail_in_ball`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallTail {
    /// Smallest `M >= 0` with `f_p(1)` in the ball for every index `p > M`
    /// (0-based, as in [`FamilySequence::exponents_at_1`]), or `None` when
    /// even the last term lies outside. `M = 0` says nothing about `p = 0`.
    pub index: Option<usize>,
    /// Certified enclosure of `ln sigma` used for the decision.
    pub ln_sigma: Interval,
}

pub fn tail_in_ball(seq: &FamilySequence, ball: &Ball) -> Result<BallTail> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut index = Some(0);
    for p in (0..seq.len()).rev() {
        if !ball.contains_exp(&seq.exponents_at_1[p])? {
            index = if p + 1 == seq.len() { None } else { Some(p) };
            break;
        }
    }
    Ok(BallTail { index, ln_sigma: ball.ln_sigma(128) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_rational;

    fn c(k: u32, m: u64, u: i64) -> ParamCombo {
        ParamCombo::standard(k, m, u).unwrap()
    }

    fn constant_u(u: i64, ms: std::ops::RangeInclusive<u64>) -> FamilySequence {
        let combos: Vec<_> = ms.map(|m| c(1, m, u)).collect();
        build_increasing_sequence(&combos).unwrap()
    }

    #[test]
    fn builds_sorted_by_abs_a() {
        let seq = build_increasing_sequence(&[c(1, 4, 2), c(1, 2, 2), c(1, 3, 2)]).unwrap();
        let a: Vec<i64> = seq.abs_a_values().iter().map(|v| i64::try_from(v).unwrap()).collect();
        assert_eq!(a, [1, 2, 3]);
        assert_eq!(build_increasing_sequence(&[c(2, 3, 3)]).unwrap().len(), 1);
    }

    #[test]
    fn duplicate_abs_a_is_rejected() {
        assert_eq!(
            build_increasing_sequence(&[c(1, 2, 2), c(1, 2, 2)]),
            Err(Error::DuplicateAbsA { abs_a: BigInt::from(1) })
        );
        // same |A| from different combos
        assert!(build_increasing_sequence(&[c(1, 5, 1), c(2, 5, 1)]).is_err());
    }

    #[test]
    fn odd_nk_is_rejected() {
        let odd = ParamCombo::new(3, 2, 2, 1).unwrap();
        assert_eq!(build_increasing_sequence(&[odd]), Err(Error::OddNk { nk: 3 }));
    }

    #[test]
    fn constant_u_decreases() {
        let seq = constant_u(2, 2..=5);
        let e: Vec<String> = seq.exponents_at_1().iter().map(ToString::to_string).collect();
        assert_eq!(e, ["-2", "-4", "-6", "-8"]);
        assert!(check_monotone_decrease(&seq).holds_on_grid());
        assert!(check_monotone_decrease(&constant_u(3, 4..=4)).holds_on_grid());
    }

    #[test]
    fn varying_u_exposes_gap() {
        let seq = build_increasing_sequence(&[c(1, 3, 10), c(1, 4, 1)]).unwrap();
        let report = check_monotone_decrease(&seq);
        assert!(!report.holds_on_grid());
        assert_eq!(report.witnesses.len(), 2);
        assert_eq!(report.witnesses[0].exponent, ExactExponent::from(-20));
        assert_eq!(report.witnesses[1].exponent, ExactExponent::from(-3));
        assert!(report.replay());
    }

    #[test]
    fn tail_examples() {
        let seq = constant_u(2, 2..=10);
        let ball = Ball::new(parse_rational("1/100").unwrap()).unwrap();
        let tail = tail_in_ball(&seq, &ball).unwrap();
        assert_eq!(tail.index, Some(1));
        // ln(1/100) = -4.60517...
        let ln = -(100f64.ln());
        let (lo, hi) = tail.ln_sigma.to_decimal_pair(12);
        assert!(lo.parse::<f64>().unwrap() <= ln && ln <= hi.parse::<f64>().unwrap());

        let two = Ball::new(parse_rational("2").unwrap()).unwrap();
        assert_eq!(tail_in_ball(&seq, &two).unwrap().index, Some(0));

        // 10^-500 is below e^-1000, and every exponent here is >= -18
        let tiny = Ball::new(BigRational::new(1.into(), BigInt::from(10).pow(500))).unwrap();
        assert_eq!(tail_in_ball(&seq, &tiny).unwrap().index, None);
    }

    #[test]
    fn tail_rejects_empty() {
        let seq = build_increasing_sequence(&[]).unwrap();
        let ball = Ball::new(parse_rational("1").unwrap()).unwrap();
        assert_eq!(tail_in_ball(&seq, &ball), Err(Error::EmptySequence));
    }

    #[test]
    fn ball_boundary_is_open() {
        // e^0 = 1 is not inside B_1(0)
        let ball = Ball::new(parse_rational("1").unwrap()).unwrap();
        assert!(!ball.contains_exp(&ExactExponent::zero()).unwrap());
        assert!(ball.contains_exp(&ExactExponent::from(-1)).unwrap());
        assert!(Ball::new(parse_rational("0").unwrap()).is_err());
    }

    #[test]
    fn partner_exponents_match() {
        let seq = constant_u(3, 2..=8);
        assert_eq!(seq.partner_exponents(), seq.exponents_at_1());
    }
}
