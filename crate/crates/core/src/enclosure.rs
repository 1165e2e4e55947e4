//! Certified rational enclosures of `ln` and `exp`.
//!
//! Every enclosure is a closed interval with rational endpoints that is
//! guaranteed to contain the true real value. Endpoints are rounded outward
//! to dyadic rationals so denominators stay bounded by the working precision.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Initial working precision in bits for refinement loops.
pub const START_BITS: u64 = 64;
/// Refinement stops with [`Error::Undecided`] beyond this precision.
pub const MAX_BITS: u64 = 1 << 18;

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Decides where `x` sits relative to every point of the interval.
    ///
    /// Returns `Some(Less)` when the whole interval is below `x`, `Some(Greater)`
    /// when it is above, `Some(Equal)` only for a degenerate interval equal to
    /// `x`, and `None` when `x` lies inside a nondegenerate interval.
    pub fn compare_with(&self, x: &BigRational) -> Option<Ordering> {
        if &self.hi < x {
            Some(Ordering::Less)
        } else if &self.lo > x {
            Some(Ordering::Greater)
        } else if self.lo == self.hi {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn shift(&self, by: &BigRational) -> Interval {
        Interval::new(&self.lo + by, &self.hi + by)
    }

    pub fn scale(&self, by: &BigRational) -> Interval {
        let a = &self.lo * by;
        let b = &self.hi * by;
        if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }

    pub fn round_outward(&self, bits: u64) -> Interval {
        Interval::new(floor_dyadic(&self.lo, bits), ceil_dyadic(&self.hi, bits))
    }

    /// Decimal rendering with `digits` fractional digits, rounded outward so
    /// the printed pair still encloses the interval.
    pub fn to_decimal_pair(&self, digits: usize) -> (String, String) {
        let scale = BigRational::from_integer(BigInt::from(10u32).pow(digits as u32));
        let lo = (&self.lo * &scale).floor().to_integer();
        let hi = (&self.hi * &scale).ceil().to_integer();
        (format_scaled(&lo, digits), format_scaled(&hi, digits))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

fn pow2(bits: u64) -> BigInt {
    BigInt::one() << bits as usize
}

pub(crate) fn floor_dyadic(x: &BigRational, bits: u64) -> BigRational {
    let s = pow2(bits);
    BigRational::new((x * BigRational::from_integer(s.clone())).floor().to_integer(), s)
}

pub(crate) fn ceil_dyadic(x: &BigRational, bits: u64) -> BigRational {
    let s = pow2(bits);
    BigRational::new((x * BigRational::from_integer(s.clone())).ceil().to_integer(), s)
}

/// Formats the integer `n / 10^digits` as a plain decimal string.
pub(crate) fn format_scaled(n: &BigInt, digits: usize) -> String {
    let neg = n.is_negative();
    let s = n.abs().to_string();
    let body = if digits == 0 {
        s
    } else if s.len() > digits {
        let (int, frac) = s.split_at(s.len() - digits);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{}", "0".repeat(digits - s.len()), s)
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn bit_length(n: &BigInt) -> u64 {
    n.bits()
}

/// `Interval` from fixed-point bounds `lo / 2^bits` and `hi / 2^bits`.
fn from_fixed(lo: BigInt, hi: BigInt, bits: u64) -> Interval {
    let s = pow2(bits);
    Interval::new(BigRational::new(lo, s.clone()), BigRational::new(hi, s))
}

/// Enclosure of `atanh(t)` for `0 <= t <= 1/3`, absolute width about `2^-bits`.
///
/// Runs in fixed point with scale `2^bits`; lower bounds round down and upper
/// bounds round up at every step.
fn atanh_small(t: &BigRational, bits: u64) -> Interval {
    if t.is_zero() {
        return Interval::point(BigRational::zero());
    }
    let (p, q) = (t.numer().clone(), t.denom().clone());
    let (p2, q2) = (&p * &p, &q * &q);
    let gap = &q2 - &p2;
    let scale = pow2(bits);
    let mut pow_lo = (&scale * &p).div_floor(&q);
    let mut pow_hi = (&scale * &p).div_ceil(&q);
    let mut sum_lo = BigInt::zero();
    let mut sum_hi = BigInt::zero();
    let mut j: u64 = 0;
    loop {
        let denom = BigInt::from(2 * j + 1);
        sum_lo += pow_lo.div_floor(&denom);
        sum_hi += pow_hi.div_ceil(&denom);
        pow_lo = (&pow_lo * &p2).div_floor(&q2);
        pow_hi = (&pow_hi * &p2).div_ceil(&q2);
        // tail after term j is at most t^(2j+3) / ((2j+3)(1 - t^2))
        let tail = (&pow_hi * &q2).div_ceil(&(BigInt::from(2 * j + 3) * &gap));
        if tail <= BigInt::one() {
            return from_fixed(sum_lo, sum_hi + tail, bits);
        }
        j += 1;
    }
}

/// Enclosure of `ln 2 = 2 atanh(1/3)`.
pub fn ln2(bits: u64) -> Interval {
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    atanh_small(&third, bits + 2).scale(&BigRational::from_integer(BigInt::from(2)))
}

/// Certified enclosure of `ln x` for rational `x > 0`.
pub fn ln(x: &BigRational, bits: u64) -> Result<Interval> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("ln of nonpositive value {x}")));
    }
    if x.is_one() {
        return Ok(Interval::point(BigRational::zero()));
    }
    // x = 2^k * y with 1 <= y < 2
    let mut k: i64 = bit_length(x.numer()) as i64 - bit_length(x.denom()) as i64;
    let mut y = scale_pow2(x, -k);
    let two = BigRational::from_integer(BigInt::from(2));
    while y >= two {
        y /= &two;
        k += 1;
    }
    while y < BigRational::one() {
        y *= &two;
        k -= 1;
    }
    let guard = 8 + 64 - (k.unsigned_abs().leading_zeros() as u64);
    let work = bits + guard;
    let t = (&y - BigRational::one()) / (&y + BigRational::one());
    let ln_y = atanh_small(&t, work).scale(&two);
    let total = if k == 0 {
        ln_y
    } else {
        ln2(work).scale(&BigRational::from_integer(BigInt::from(k))).add(&ln_y)
    };
    Ok(total.round_outward(bits + 2))
}

fn scale_pow2(x: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        x * BigRational::from_integer(pow2(k as u64))
    } else {
        x / BigRational::from_integer(pow2(k.unsigned_abs()))
    }
}

/// Certified enclosure of `e^x` for rational `x`.
///
/// `bits` is an absolute precision for values of moderate size; the working
/// precision is raised with `|x|` so the enclosure stays tight after squaring.
pub fn exp(x: &BigRational, bits: u64) -> Interval {
    if x.is_zero() {
        return Interval::point(BigRational::one());
    }
    if x.is_negative() {
        let pos = exp(&-x, bits + 2 + magnitude_bits(x));
        let lo = floor_dyadic(&(BigRational::one() / pos.hi()), bits + 2);
        let hi = ceil_dyadic(&(BigRational::one() / pos.lo()), bits + 2);
        return Interval::new(lo, hi);
    }
    // reduce to y = x / 2^s <= 1/2
    let ceil_x = x.ceil().to_integer();
    let s = bit_length(&ceil_x) + 1;
    let y = scale_pow2(x, -(s as i64));
    let work = bits + 2 * s + 2 * magnitude_bits(x) + 16;
    let scale = pow2(work);
    let (p, q) = (y.numer().clone(), y.denom().clone());
    let mut term_lo = scale.clone();
    let mut term_hi = scale.clone();
    let mut sum_lo = BigInt::zero();
    let mut sum_hi = BigInt::zero();
    let mut j: u64 = 0;
    let (mut lo, mut hi) = loop {
        sum_lo += &term_lo;
        sum_hi += &term_hi;
        let next = &q * BigInt::from(j + 1);
        term_lo = (&term_lo * &p).div_floor(&next);
        term_hi = (&term_hi * &p).div_ceil(&next);
        // remaining tail <= 2 * y^(j+1) / (j+1)! for y <= 1/2
        if term_hi <= BigInt::one() {
            break (sum_lo, sum_hi + &term_hi * 2);
        }
        j += 1;
    };
    for _ in 0..s {
        lo = (&lo * &lo) >> work as usize;
        hi = (&hi * &hi + &scale - 1u32) >> work as usize;
    }
    from_fixed(lo, hi, work)
}

/// Bits of headroom needed for `e^x`, used to widen working precision.
fn magnitude_bits(x: &BigRational) -> u64 {
    // e^x carries about 1.45 |x| bits
    let approx = x.abs().ceil().to_integer() * BigInt::from(3) / BigInt::from(2);
    u64::try_from(&approx).unwrap_or(u64::MAX / 4).min(u64::MAX / 4)
}

/// Compares `ln x` with a rational `target`, refining until decisive.
///
/// `ln x` is irrational for rational `x != 1`, so the loop terminates; the
/// precision cap only guards against pathological inputs.
pub fn cmp_ln(x: &BigRational, target: &BigRational) -> Result<Ordering> {
    if x.is_one() {
        return Ok(BigRational::zero().cmp(target));
    }
    let mut bits = START_BITS;
    while bits <= MAX_BITS {
        if let Some(ord) = ln(x, bits)?.compare_with(target) {
            return Ok(ord);
        }
        bits *= 2;
    }
    Err(Error::Undecided { bits })
}

/// Outcome of rendering `e^E` to a fixed number of decimal places.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rendered {
    Value(String),
    Underflow,
    Overflow,
}

/// Renders `e^exponent` with `digits` fractional digits, correctly rounded.
///
/// Values below `10^-digits` report [`Rendered::Underflow`] and values at or
/// above `10^digits` report [`Rendered::Overflow`].
pub fn render_exp(exponent: &BigRational, digits: usize) -> Result<Rendered> {
    if exponent.is_zero() {
        return Ok(Rendered::Value("1".to_string()));
    }
    let scale_int = BigInt::from(10u32).pow(digits as u32);
    let scale = BigRational::from_integer(scale_int.clone());
    // e^E < 10^-d  <=>  E < -ln(10^d)
    if cmp_ln(&scale, &-exponent)? == Ordering::Less {
        return Ok(Rendered::Underflow);
    }
    if cmp_ln(&scale, exponent)? != Ordering::Greater {
        return Ok(Rendered::Overflow);
    }
    let mut bits = START_BITS + 4 * digits as u64;
    while bits <= MAX_BITS {
        let iv = exp(exponent, bits).scale(&scale);
        let lo = round_half_up(iv.lo());
        let hi = round_half_up(iv.hi());
        if lo == hi {
            return Ok(Rendered::Value(trim_decimal(format_scaled(&lo, digits))));
        }
        bits *= 2;
    }
    Err(Error::Undecided { bits })
}

fn round_half_up(x: &BigRational) -> BigInt {
    (x + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

fn trim_decimal(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn f(x: &BigRational) -> f64 {
        x.numer().to_string().parse::<f64>().unwrap() / x.denom().to_string().parse::<f64>().unwrap()
    }

    #[test]
    fn ln_matches_float_and_is_tight() {
        for (n, d) in [(2, 1), (1, 2), (10, 1), (3, 7), (1000, 3), (1, 100)] {
            let x = q(n, d);
            let iv = ln(&x, 80).unwrap();
            let expect = (n as f64 / d as f64).ln();
            assert!(f(iv.lo()) <= expect + 1e-15 && f(iv.hi()) >= expect - 1e-15);
            assert!(iv.width() < q(1, 1 << 40));
        }
    }

    #[test]
    fn ln_of_one_is_exact_zero() {
        assert_eq!(ln(&q(1, 1), 64).unwrap(), Interval::point(q(0, 1)));
    }

    #[test]
    fn ln_rejects_nonpositive() {
        assert!(matches!(ln(&q(0, 1), 64), Err(Error::Domain(_))));
        assert!(matches!(ln(&q(-3, 2), 64), Err(Error::Domain(_))));
    }

    #[test]
    fn exp_brackets_float() {
        for (n, d) in [(1, 1), (-2, 1), (7, 3), (-40, 1), (35, 1)] {
            let x = q(n, d);
            let iv = exp(&x, 80);
            let expect = (n as f64 / d as f64).exp();
            let lo = f(iv.lo());
            let hi = f(iv.hi());
            assert!(lo <= expect * (1.0 + 1e-14) && hi >= expect * (1.0 - 1e-14), "{x}: {lo} {hi} {expect}");
        }
    }

    #[test]
    fn render_exp_rounds_and_flags_range() {
        assert_eq!(render_exp(&q(0, 1), 30).unwrap(), Rendered::Value("1".into()));
        assert_eq!(
            render_exp(&q(-2, 1), 10).unwrap(),
            Rendered::Value("0.1353352832".into())
        );
        assert_eq!(render_exp(&q(1, 1), 5).unwrap(), Rendered::Value("2.71828".into()));
        assert_eq!(render_exp(&q(-327672, 1), 30).unwrap(), Rendered::Underflow);
        assert_eq!(render_exp(&q(100, 1), 30).unwrap(), Rendered::Overflow);
    }

    #[test]
    fn cmp_ln_decides_close_targets() {
        // ln 2 = 0.693147180559945309...
        assert_eq!(cmp_ln(&q(2, 1), &q(693147180559945309, 1_000_000_000_000_000_000)).unwrap(), Ordering::Greater);
        assert_eq!(cmp_ln(&q(2, 1), &q(693147180559945310, 1_000_000_000_000_000_000)).unwrap(), Ordering::Less);
    }

    #[test]
    fn decimal_pair_rounds_outward() {
        let iv = Interval::new(q(1, 3), q(2, 3));
        assert_eq!(iv.to_decimal_pair(3), ("0.333".to_string(), "0.667".to_string()));
        let neg = Interval::new(q(-2, 3), q(-1, 3));
        assert_eq!(neg.to_decimal_pair(2), ("-0.67".to_string(), "-0.33".to_string()));
    }
}
