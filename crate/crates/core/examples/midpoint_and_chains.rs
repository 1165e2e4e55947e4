//! Vertex of the exponent, the value there, and mirrored offset chains for
//! both signs of u.

use quadexp::analysis::{delta_chain, midpoint, midpoint_value_exponent, mirrored_chain_g};
use quadexp::exact::{parse_rational, ParamCombo};

fn main() -> quadexp::Result<()> {
    for (k, m, u) in [(1, 3, 2), (1, 6, 2), (3, 10, 8)] {
        let combo = ParamCombo::standard(k, m, u)?;
        let mid = midpoint(&combo)?;
        let e = midpoint_value_exponent(&combo)?;
        println!("{combo}: theta = {} on [{}, {}], f(theta) = e^{e}", mid.theta, mid.left, mid.right);
    }

    let deltas: Vec<_> = ["1/2", "1", "3/2", "2"].iter().map(|s| parse_rational(s).unwrap()).collect();
    let f = delta_chain(&ParamCombo::standard(1, 6, 2)?, &deltas)?;
    println!("f chain: {:?}, mirror equal {}, reaches midpoint {}", f.direction, f.mirror_equal, f.reaches_midpoint);
    for (d, e) in deltas.iter().zip(&f.values_left) {
        println!("  delta {d}: e^{e}");
    }

    let g = mirrored_chain_g(&ParamCombo::standard(1, 6, -2)?, &deltas[..2])?;
    println!("g chain: {:?}, exponents {:?}", g.direction, g.values_left.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}
