//! Grid harness that runs every family-level claim and collects reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::report::{ClaimId, ClaimReport, Witness};
use super::sequence::{build_increasing_sequence, check_monotone_decrease, tail_in_ball, Ball};
use super::GridBounds;
use crate::error::Result;
use crate::exact::{check_symmetry, compute_abs_a, exponent_at_int, ExactExponent, ParamCombo};

/// Integers checked on each side when scanning for a second partner.
const PARTNER_WINDOW: u64 = 64;
/// Counterexample pairs kept in the varying-u report.
const VARYING_U_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimsSummary {
    pub bounds: GridBounds,
    pub claims: Vec<ClaimReport>,
}

impl ClaimsSummary {
    pub fn get(&self, claim: ClaimId) -> Option<&ClaimReport> {
        self.claims.iter().find(|r| r.claim == claim)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("claim summaries always serialize")
    }
}

pub fn run_claims(bounds: &GridBounds) -> Result<ClaimsSummary> {
    Ok(ClaimsSummary {
        bounds: *bounds,
        claims: vec![
            symmetry(bounds)?,
            partner_uniqueness(bounds),
            monotone_constant_u(bounds)?,
            monotone_varying_u(bounds),
            tail(bounds)?,
        ],
    })
}

fn symmetry(bounds: &GridBounds) -> Result<ClaimReport> {
    let mut witnesses = Vec::new();
    for k in 1..=bounds.k_max {
        for m in 1..=bounds.m_max {
            for u in 1..=bounds.u_max {
                for n in [2, 4] {
                    let combo = ParamCombo::symmetric(k, m, u, n)?;
                    if compute_abs_a(&combo).is_degenerate() {
                        continue;
                    }
                    if !check_symmetry(&combo)? {
                        witnesses.push(Witness::at_one(&combo));
                    }
                }
            }
        }
    }
    let grid = format!(
        "k<={}, m<={}, u<={}, N in {{2,4}}, Z != 1",
        bounds.k_max, bounds.m_max, bounds.u_max
    );
    Ok(ClaimReport::from_witnesses(ClaimId::Symmetry, grid, witnesses))
}

fn partner_uniqueness(bounds: &GridBounds) -> ClaimReport {
    let mut witnesses = Vec::new();
    let one = BigInt::from(1);
    let window = BigInt::from(PARTNER_WINDOW);
    for combo in bounds.combos() {
        let abs_a = compute_abs_a(&combo).value;
        if abs_a < one {
            continue;
        }
        let at_one = exponent_at_int(&combo, &one);
        let upper: BigInt = &abs_a + 10;
        let low_end = (&one + &window).min(upper.clone());
        let high_start = (&abs_a - &window).max(one.clone());
        let mut check = |x: BigInt| {
            if x != one && x != abs_a && exponent_at_int(&combo, &x) == at_one {
                witnesses.push(Witness::at(&combo, x));
            }
        };
        let mut x = one.clone();
        while x <= low_end {
            check(x.clone());
            x += 1;
        }
        let mut x = high_start.max(&low_end + 1);
        while x <= upper {
            check(x.clone());
            x += 1;
        }
    }
    let grid = format!(
        "k<={}, m<={}, u<={}, N=2, x in [1, {w}] and [|A|-{w}, |A|+10]",
        bounds.k_max,
        bounds.m_max,
        bounds.u_max,
        w = PARTNER_WINDOW
    );
    ClaimReport::from_witnesses(ClaimId::PartnerUniqueness, grid, witnesses)
}

fn constant_u_sequences(bounds: &GridBounds) -> Result<Vec<super::FamilySequence>> {
    let mut out = Vec::new();
    for k in 1..=bounds.k_max {
        for u in 1..=bounds.u_max {
            let combos: Vec<_> = (2..=bounds.m_max)
                .map(|m| ParamCombo::standard(k, m, u))
                .collect::<Result<_>>()?;
            if !combos.is_empty() {
                out.push(build_increasing_sequence(&combos)?);
            }
        }
    }
    Ok(out)
}

fn monotone_constant_u(bounds: &GridBounds) -> Result<ClaimReport> {
    let mut witnesses = Vec::new();
    for seq in constant_u_sequences(bounds)? {
        witnesses.extend(check_monotone_decrease(&seq).witnesses);
    }
    let grid = format!(
        "fixed k<={}, fixed u<={}, m in 2..={}, N=2",
        bounds.k_max, bounds.u_max, bounds.m_max
    );
    Ok(ClaimReport::from_witnesses(ClaimId::MonotoneDecreaseConstantU, grid, witnesses))
}

/// Ordered pairs `(c1, c2)` of grid combinations with `|A_2| > |A_1|` whose
/// exponents at 1 fail to decrease, in lexicographic order of `(c1, c2)`.
fn monotone_varying_u(bounds: &GridBounds) -> ClaimReport {
    let one = BigInt::from(1);
    let table: Vec<(ParamCombo, BigInt, ExactExponent)> = bounds
        .combos()
        .map(|c| (c, compute_abs_a(&c).value, exponent_at_int(&c, &one)))
        .collect();
    let mut witnesses = Vec::new();
    'outer: for (c1, a1, e1) in &table {
        for (c2, a2, e2) in &table {
            if a2 > a1 && e2 >= e1 {
                witnesses.push(Witness::at_one(c1));
                witnesses.push(Witness::at_one(c2));
                if witnesses.len() >= 2 * VARYING_U_LIMIT {
                    break 'outer;
                }
            }
        }
    }
    let grid = format!(
        "pairs over k<={}, m<={}, u<={}, N=2 with |A| increasing (first {} pairs)",
        bounds.k_max, bounds.m_max, bounds.u_max, VARYING_U_LIMIT
    );
    ClaimReport::from_witnesses(ClaimId::MonotoneDecreaseVaryingU, grid, witnesses)
}

fn tail(bounds: &GridBounds) -> Result<ClaimReport> {
    let mut witnesses = Vec::new();
    let radii = [10u32, 100, 1000];
    for seq in constant_u_sequences(bounds)? {
        for r in radii {
            let ball = Ball::new(BigRational::new(1.into(), r.into()))?;
            if tail_in_ball(&seq, &ball)?.index.is_none() {
                witnesses.push(Witness::at_one(seq.combos().last().expect("nonempty")));
            }
        }
    }
    let grid = format!(
        "fixed k<={}, fixed u<={}, m in 2..={}, sigma in {{1/10, 1/100, 1/1000}}",
        bounds.k_max, bounds.u_max, bounds.m_max
    );
    Ok(ClaimReport::from_witnesses(ClaimId::TailInBall, grid, witnesses))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_summary() {
        let summary = run_claims(&GridBounds::new(2, 10, 4)).unwrap();
        assert!(summary.get(ClaimId::Symmetry).unwrap().holds_on_grid());
        assert!(summary.get(ClaimId::PartnerUniqueness).unwrap().holds_on_grid());
        assert!(summary.get(ClaimId::MonotoneDecreaseConstantU).unwrap().holds_on_grid());
        let varying = summary.get(ClaimId::MonotoneDecreaseVaryingU).unwrap();
        assert!(!varying.holds_on_grid());
        assert!(varying.replay());
        assert!(summary.get(ClaimId::TailInBall).unwrap().holds_on_grid());
    }

    #[test]
    fn summary_is_deterministic() {
        let b = GridBounds::new(2, 5, 3);
        assert_eq!(run_claims(&b).unwrap().to_json(), run_claims(&b).unwrap().to_json());
    }
}
