//! Sign change of f' at the vertex, exact central differences, and an
//! intermediate derivative value located by exact bisection.

use quadexp::analysis::{default_bisection_tolerance, verify_darboux, verify_rolle};
use quadexp::exact::{parse_rational, ParamCombo, ScaledExp};

fn main() -> quadexp::Result<()> {
    let combo = ParamCombo::standard(1, 4, 2)?;
    let report = verify_rolle(&combo, &parse_rational("1/8").unwrap())?;
    println!("{combo}: theta = {}", report.theta);
    for s in &report.samples {
        println!("  x = {:>5}  sign {}  Q'(x) = {}", s.x.to_string(), s.sign, s.derivative);
    }
    println!("  sign pattern {}, differences exact {}", report.sign_pattern_holds, report.finite_difference_exact);

    // half of f'(1), which lies between f'(1) and f'(theta) = 0
    let beta = ScaledExp::derivative(&combo, &parse_rational("1").unwrap()).scale(&parse_rational("1/2").unwrap());
    let w = verify_darboux(&combo, &beta, &default_bisection_tolerance())?;
    println!("f'(x) = {beta} for x in [{}, {}] after {} steps", w.lo, w.hi, w.iterations);
    Ok(())
}
