//! Values are kept as exact exponents; decimals are produced only on request
//! and only when they fit the chosen number of digits.

use quadexp::enclosure::{render_exp, Rendered};
use quadexp::exact::{compare_values, value_at, parse_rational, ParamCombo};

fn main() -> quadexp::Result<()> {
    let one = parse_rational("1").unwrap();
    for (k, m, u) in [(1, 4, 2), (2, 3, 2), (3, 10, 8)] {
        let combo = ParamCombo::standard(k, m, u)?;
        let q = value_at(&combo, &one);
        let shown = match render_exp(q.log_value.value(), 30)? {
            Rendered::Value(v) => v,
            Rendered::Underflow => "below 1e-30".to_string(),
            Rendered::Overflow => "at least 1e30".to_string(),
        };
        println!("{combo}: f(1) = e^{} = {shown}", q.log_value);
    }

    let a = value_at(&ParamCombo::standard(1, 3, 10)?, &one);
    let b = value_at(&ParamCombo::standard(1, 4, 1)?, &one);
    println!("e^{} vs e^{}: {:?}", a.log_value, b.log_value, compare_values(&a, &b));
    Ok(())
}
