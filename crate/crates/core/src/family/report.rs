use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::exact::{compute_abs_a, exponent_at, serialize_bigint, ExactExponent, ParamCombo};

/// Label of a checkable claim about the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimId {
    /// `f(1) = f(|A|)` whenever `N·k` is even.
    Symmetry,
    /// No integer other than 1 and `|A|` shares the value `f(1)`.
    PartnerUniqueness,
    /// `|A_p|` increasing implies `f_p(1)` strictly decreasing.
    MonotoneDecrease,
    /// Same claim restricted to a fixed `u` per sequence.
    MonotoneDecreaseConstantU,
    /// Same claim with `u` free to vary between neighbours.
    MonotoneDecreaseVaryingU,
    /// The tail of `{f_p(1)}` enters every ball `B_sigma(0)`.
    TailInBall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HoldsOnGrid,
    CounterexampleFound,
}

/// One combination cited by a report, with the exponent of `f` at `x`
/// (at `x = 1` unless `x` is given).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub combo: ParamCombo,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_opt_bigint")]
    pub x: Option<BigInt>,
    pub exponent: ExactExponent,
    #[serde(rename = "absA", serialize_with = "serialize_bigint")]
    pub abs_a: BigInt,
}

fn serialize_opt_bigint<S: serde::Serializer>(
    n: &Option<BigInt>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    match n {
        Some(n) => serialize_bigint(n, serializer),
        None => serializer.serialize_none(),
    }
}

impl Witness {
    pub fn at_one(combo: &ParamCombo) -> Self {
        Self {
            combo: *combo,
            x: None,
            exponent: exponent_at(combo, &BigRational::from_integer(1.into())),
            abs_a: compute_abs_a(combo).value,
        }
    }

    pub fn at(combo: &ParamCombo, x: BigInt) -> Self {
        Self {
            combo: *combo,
            exponent: exponent_at(combo, &BigRational::from_integer(x.clone())),
            x: Some(x),
            abs_a: compute_abs_a(combo).value,
        }
    }

    /// Recomputes the exponent and `|A|` from the combination.
    pub fn replays(&self) -> bool {
        let x = self.x.clone().unwrap_or_else(|| BigInt::from(1));
        exponent_at(&self.combo, &BigRational::from_integer(x)) == self.exponent
            && compute_abs_a(&self.combo).value == self.abs_a
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub grid: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl ClaimReport {
    pub fn holds(claim: ClaimId, grid: impl Into<String>) -> Self {
        Self { claim, grid: grid.into(), verdict: Verdict::HoldsOnGrid, witnesses: Vec::new() }
    }

    pub fn from_witnesses(claim: ClaimId, grid: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        let verdict = if witnesses.is_empty() {
            Verdict::HoldsOnGrid
        } else {
            Verdict::CounterexampleFound
        };
        Self { claim, grid: grid.into(), verdict, witnesses }
    }

    pub fn holds_on_grid(&self) -> bool {
        self.verdict == Verdict::HoldsOnGrid
    }

    /// Re-verifies every witness from its combination alone. For the
    /// monotone-decrease claims witnesses come in adjacent pairs, and each
    /// pair must still show `|A|` increasing without the exponent decreasing.
    pub fn replay(&self) -> bool {
        if !self.witnesses.iter().all(Witness::replays) {
            return false;
        }
        match self.claim {
            ClaimId::MonotoneDecrease
            | ClaimId::MonotoneDecreaseConstantU
            | ClaimId::MonotoneDecreaseVaryingU => {
                self.witnesses.len().is_multiple_of(2)
                    && self.witnesses.chunks(2).all(|pair| {
                        pair[1].abs_a > pair[0].abs_a && pair[1].exponent >= pair[0].exponent
                    })
            }
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("claim reports always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape_is_stable() {
        let c1 = ParamCombo::standard(1, 3, 10).unwrap();
        let c2 = ParamCombo::standard(1, 4, 1).unwrap();
        let report = ClaimReport::from_witnesses(
            ClaimId::MonotoneDecrease,
            "pair",
            vec![Witness::at_one(&c1), Witness::at_one(&c2)],
        );
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"claim":"monotone-decrease","grid":"pair","verdict":"counterexample-found","witnesses":[{"combo":{"k":1,"m":3,"u":10,"N":2},"exponent":"-20","absA":2},{"combo":{"k":1,"m":4,"u":1,"N":2},"exponent":"-3","absA":3}]}"#
        );
        assert!(report.replay());
    }

    #[test]
    fn tampered_witness_fails_replay() {
        let c = ParamCombo::standard(1, 3, 2).unwrap();
        let mut w = Witness::at_one(&c);
        w.exponent = ExactExponent::from(-5);
        let report = ClaimReport::from_witnesses(ClaimId::Symmetry, "one", vec![w]);
        assert!(!report.replay());
    }

    #[test]
    fn explicit_argument_is_serialized() {
        let c = ParamCombo::standard(1, 4, 2).unwrap();
        let w = Witness::at(&c, BigInt::from(3));
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"combo":{"k":1,"m":4,"u":2,"N":2},"x":3,"exponent":"-6","absA":3}"#
        );
        assert!(w.replays());
    }
}
