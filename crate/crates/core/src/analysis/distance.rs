use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::enclosure::{self, Interval};
use crate::error::{Error, Result};
use crate::exact::{compute_abs_a, ParamCombo};

/// Precision of the logarithm enclosures in [`log_distance`].
pub const LOG_DISTANCE_BITS: u64 = 160;

/// Default acceptance threshold for [`solve_distance_equals_value`].
pub const SOLVER_TOLERANCE: f64 = 1e-12;

/// Distance from 1 to `|A|`, i.e. `|A| - 1`.
pub fn distance_d(combo: &ParamCombo) -> Result<BigInt> {
    let abs_a = compute_abs_a(combo);
    if abs_a.is_degenerate() {
        return Err(Error::Degenerate);
    }
    Ok(abs_a.value - 1)
}

/// Two independent enclosures of `ln(Z - 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogDistance {
    /// `ln(Z - 2)` evaluated directly.
    pub direct: Interval,
    /// `ln Z + ln(1 - 2/Z)` with the Mercator series truncated after
    /// `terms` terms and its tail bounded.
    pub series: Interval,
    pub terms: u32,
}

pub fn log_distance(z: &BigRational, terms: u32) -> Result<LogDistance> {
    let two = BigRational::from_integer(BigInt::from(2));
    if z <= &two {
        return Err(Error::Domain(format!("log distance needs Z > 2, got {z}")));
    }
    if terms == 0 {
        return Err(Error::Domain("at least one series term is required".into()));
    }
    let direct = enclosure::ln(&(z - &two), LOG_DISTANCE_BITS)?;
    let ln_z = enclosure::ln(z, LOG_DISTANCE_BITS)?;

    // ln(1 - r) = -sum_{j>=1} r^j / j with r = 2/Z in (0, 1)
    let r = &two / z;
    let mut power = BigRational::one();
    let mut partial = BigRational::zero();
    for j in 1..=terms {
        power *= &r;
        partial += &power / BigRational::from_integer(BigInt::from(j));
    }
    let next = BigInt::from(terms) + 1;
    let tail = &power * &r / (BigRational::from_integer(next) * (BigRational::one() - &r));
    let series_part = Interval::new(-&partial - tail, -partial);
    let series = ln_z.add(&series_part);
    if !direct.overlaps(&series) {
        return Err(Error::Postcondition(format!(
            "enclosures {direct} and {series} of ln(Z - 2) are disjoint"
        )));
    }
    Ok(LogDistance { direct, series, terms })
}

/// Real parameters for which the distance `Z - 2` equals `f(|A|) = e^{u(1-Z)}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceSolution {
    pub z: f64,
    /// `E = N·k - 2`.
    pub exponent_index: u32,
    pub u_real: f64,
    /// `Z / u^E`.
    pub m_real: f64,
    /// `Z (1 - Z)^E / ln(Z - 2)^E`.
    pub m_closed_form: f64,
    pub relative_gap: f64,
    /// `|(Z - 2) - e^{u(1 - Z)}|`.
    pub residual: f64,
    pub tolerance: f64,
    pub within_tolerance: bool,
    /// The solution needs `u < 0`, i.e. the mirrored family.
    pub negative_u: bool,
    /// Both `u` and `m` came out as integers, which the integer-parameter
    /// family would require.
    pub integral_parameters: bool,
}

pub fn solve_distance_equals_value(z: f64, exponent_index: u32, tolerance: f64) -> Result<DistanceSolution> {
    if !z.is_finite() || z <= 2.0 {
        return Err(Error::Domain(format!("need finite Z > 2, got {z}")));
    }
    if z == 3.0 {
        return Err(Error::Domain("Z = 3 makes ln(Z - 2) vanish".into()));
    }
    if exponent_index == 0 {
        return Err(Error::Domain("E = N·k - 2 must be at least 1".into()));
    }
    let e = exponent_index as i32;
    let ln_d = (z - 2.0).ln();
    let u_real = ln_d / (1.0 - z);
    let m_real = z / u_real.powi(e);
    let m_closed_form = z * (1.0 - z).powi(e) / ln_d.powi(e);
    let relative_gap = ((m_real - m_closed_form) / m_closed_form).abs();
    let residual = ((z - 2.0) - (u_real * (1.0 - z)).exp()).abs();
    let is_int = |x: f64| x.is_finite() && x.fract() == 0.0;
    Ok(DistanceSolution {
        z,
        exponent_index,
        u_real,
        m_real,
        m_closed_form,
        relative_gap,
        residual,
        tolerance,
        within_tolerance: relative_gap <= tolerance && residual <= tolerance,
        negative_u: u_real.is_sign_negative(),
        integral_parameters: is_int(u_real) && is_int(m_real),
    })
}

impl LogDistance {
    pub fn contains_both(&self, x: &BigRational) -> bool {
        self.direct.contains(x) && self.series.contains(x)
    }
}
