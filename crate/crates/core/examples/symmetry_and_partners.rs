//! Each combination pairs x = 1 with the natural number |A|, and every
//! target n >= 1 is reached by at least one combination.

use num_bigint::BigInt;
use quadexp::exact::{check_symmetry, compute_abs_a, exponent_at, ParamCombo};
use quadexp::family::{enumerate_pairs, find_partner, invert_target, GridBounds};

fn main() -> quadexp::Result<()> {
    let combo = ParamCombo::standard(3, 10, 8)?;
    let partner = find_partner(&combo)?;
    let one = num_rational::BigRational::from_integer(BigInt::from(1));
    println!("{combo}: |A| = {}, partner = {partner}", compute_abs_a(&combo).value);
    println!("  exponent at 1 = {}", exponent_at(&combo, &one));
    println!("  symmetry holds: {}", check_symmetry(&combo)?);

    for n in [1u64, 2, 15, 40959] {
        let hits = invert_target(n, 4, 10);
        let shown: Vec<String> = hits.iter().take(4).map(ToString::to_string).collect();
        println!("|A| = {n}: {} combinations, e.g. {}", hits.len(), shown.join(" "));
    }

    for entry in enumerate_pairs(&GridBounds::new(1, 5, 2)) {
        match entry.partner {
            Some(p) => println!("{} -> partner {p}, f(1) = e^{}", entry.combo, entry.exponent_at_1),
            None => println!("{} -> degenerate (Z = 1)", entry.combo),
        }
    }
    Ok(())
}
