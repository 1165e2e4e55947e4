//! CSV rows for value pairs at x = 1 and the partner, and for f(1) against |A|.

use quadexp::cli::{emit_figure1, emit_figure2};
use quadexp::exact::ParamCombo;
use quadexp::family::build_increasing_sequence;

fn main() -> quadexp::Result<()> {
    let combos: Vec<_> = (2..=6).map(|m| ParamCombo::standard(1, m, 2)).collect::<Result<_, _>>()?;
    print!("{}", emit_figure1(&combos)?);
    println!();
    print!("{}", emit_figure2(&build_increasing_sequence(&combos)?));
    Ok(())
}
