//! Exact representation of parameter combinations, exponents and function
//! values. Every equality and ordering decision is made on exact rationals.

mod combo;
mod scaled;
mod value;

pub use combo::ParamCombo;
pub use scaled::ScaledExp;
pub use value::{
    check_symmetry, compare_values, compute_abs_a, derivative_factor, derivative_sign_at,
    exponent_at, parse_rational, value_at, AbsA, AbsABranch, ExactExponent, QValue, Sign,
};

pub(crate) use value::{exponent_at_int, serialize_bigint, serialize_rational};
