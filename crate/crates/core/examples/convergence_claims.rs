//! Runs the family-level claims on a small grid and shows the pair of
//! combinations on which "|A| increasing implies f(1) decreasing" fails.

use num_rational::BigRational;
use quadexp::exact::ParamCombo;
use quadexp::family::{
    build_increasing_sequence, check_monotone_decrease, run_claims, tail_in_ball, Ball, GridBounds,
};

fn main() -> quadexp::Result<()> {
    let constant: Vec<_> = (2..=12).map(|m| ParamCombo::standard(1, m, 2)).collect::<Result<_, _>>()?;
    let seq = build_increasing_sequence(&constant)?;
    println!("constant u: {:?}", check_monotone_decrease(&seq).verdict);
    for den in [10u32, 100, 1000] {
        let ball = Ball::new(BigRational::new(1.into(), den.into()))?;
        let tail = tail_in_ball(&seq, &ball)?;
        let (lo, hi) = tail.ln_sigma.to_decimal_pair(12);
        println!("  sigma = 1/{den}: M = {:?}, ln sigma in [{lo}, {hi}]", tail.index);
    }

    let gap = build_increasing_sequence(&[ParamCombo::standard(1, 3, 10)?, ParamCombo::standard(1, 4, 1)?])?;
    let report = check_monotone_decrease(&gap);
    println!("varying u: {}", serde_json::to_string(&report).unwrap());
    println!("  replays: {}", report.replay());

    let summary = run_claims(&GridBounds::new(2, 8, 4))?;
    for claim in &summary.claims {
        println!("{:?}: {:?} ({} witnesses)", claim.claim, claim.verdict, claim.witnesses.len());
    }
    Ok(())
}
