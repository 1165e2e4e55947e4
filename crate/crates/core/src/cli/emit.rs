//! CSV emitters for the two plot data sets: each combination's equal pair
//! `f_p(1) = f_p(|A_p|)`, and `f_p(1)` against `|A_p|` along a sequence.
//! Exponents are written exactly; plotting tools exponentiate them.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::exact::{exponent_at_int, ParamCombo};
use crate::family::{find_partner, FamilySequence};

pub const FIGURE1_HEADER: [&str; 7] = ["p", "k", "m", "u", "N", "x", "exponent"];
pub const FIGURE2_HEADER: [&str; 3] = ["p", "absA", "exponent_at_1"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Figure1Row {
    pub p: usize,
    pub k: u32,
    pub m: u64,
    pub u: i64,
    #[serde(rename = "N")]
    pub n: u32,
    pub x: String,
    pub exponent: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Figure2Row {
    pub p: usize,
    #[serde(rename = "absA")]
    pub abs_a: String,
    pub exponent_at_1: String,
}

/// Two rows per combination, at `x = 1` and at its partner.
pub fn figure1_rows(combos: &[ParamCombo]) -> Result<Vec<Figure1Row>> {
    let mut rows = Vec::with_capacity(2 * combos.len());
    for (i, combo) in combos.iter().enumerate() {
        let partner = find_partner(combo)?;
        for x in [BigInt::from(1), partner] {
            rows.push(Figure1Row {
                p: i + 1,
                k: combo.k(),
                m: combo.m(),
                u: combo.u(),
                n: combo.n(),
                exponent: exponent_at_int(combo, &x).to_string(),
                x: x.to_string(),
            });
        }
    }
    Ok(rows)
}

pub fn figure2_rows(seq: &FamilySequence) -> Vec<Figure2Row> {
    seq.abs_a_values()
        .iter()
        .zip(seq.exponents_at_1())
        .enumerate()
        .map(|(i, (a, e))| Figure2Row { p: i + 1, abs_a: a.to_string(), exponent_at_1: e.to_string() })
        .collect()
}

fn to_csv<R: Serialize>(header: &[&str], rows: &[R]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for row in rows {
        writer.serialize(row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}

pub fn emit_figure1(combos: &[ParamCombo]) -> Result<String> {
    Ok(to_csv(&FIGURE1_HEADER, &figure1_rows(combos)?))
}

pub fn emit_figure2(seq: &FamilySequence) -> String {
    to_csv(&FIGURE2_HEADER, &figure2_rows(seq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_increasing_sequence;

    fn c(k: u32, m: u64, u: i64) -> ParamCombo {
        ParamCombo::standard(k, m, u).unwrap()
    }

    #[test]
    fn figure1_single_combo() {
        assert_eq!(
            emit_figure1(&[c(1, 3, 2)]).unwrap(),
            "p,k,m,u,N,x,exponent\n1,1,3,2,2,1,-4\n1,1,3,2,2,2,-4\n"
        );
    }

    #[test]
    fn figure1_empty_is_header_only() {
        assert_eq!(emit_figure1(&[]).unwrap(), "p,k,m,u,N,x,exponent\n");
    }

    #[test]
    fn figure1_grid_rows_pair_up() {
        let rows = figure1_rows(&[c(1, 2, 2), c(1, 3, 2), c(1, 4, 2)]).unwrap();
        assert_eq!(rows.len(), 6);
        for pair in rows.chunks(2) {
            assert_eq!(pair[0].exponent, pair[1].exponent);
        }
    }

    #[test]
    fn figure1_rejects_degenerate() {
        assert!(emit_figure1(&[c(1, 1, 3)]).is_err());
    }

    #[test]
    fn figure2_rows() {
        let seq = build_increasing_sequence(&[c(1, 2, 2), c(1, 3, 2), c(1, 4, 2)]).unwrap();
        assert_eq!(emit_figure2(&seq), "p,absA,exponent_at_1\n1,1,-2\n2,2,-4\n3,3,-6\n");
        let single = build_increasing_sequence(&[c(2, 2, 3)]).unwrap();
        assert_eq!(emit_figure2(&single).lines().count(), 2);
    }
}
