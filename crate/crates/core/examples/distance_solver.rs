//! The distance |A| - 1, certified enclosures of ln(Z - 2), and the real
//! parameters that make the distance equal f(|A|).

use quadexp::analysis::{distance_d, log_distance, solve_distance_equals_value, SOLVER_TOLERANCE};
use quadexp::exact::{parse_rational, ParamCombo};

fn main() -> quadexp::Result<()> {
    let combo = ParamCombo::standard(3, 10, 8)?;
    println!("{combo}: D = {}", distance_d(&combo)?);

    let z = parse_rational("4").unwrap();
    for terms in [5, 20, 50] {
        let ld = log_distance(&z, terms)?;
        let (lo, hi) = ld.series.to_decimal_pair(20);
        println!("ln(Z - 2), Z = 4, {terms:>2} terms: [{lo}, {hi}]");
    }

    for z in [2.5, 4.0, 10.0] {
        for e in 1..=3 {
            let s = solve_distance_equals_value(z, e, SOLVER_TOLERANCE)?;
            println!(
                "Z = {z:>4}, E = {e}: u = {:.12}, m = {:.12}, gap {:.1e}, integral {}",
                s.u_real, s.m_real, s.relative_gap, s.integral_parameters
            );
        }
    }
    Ok(())
}
