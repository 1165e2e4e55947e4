use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};

/// One parameter combination `{k, m, u, N}` of the family
/// `f(x) = exp(u x^2 + v x)` with `v = (-1)^(Nk-1) m u^(Nk-1)`.
///
/// Field order gives the lexicographic `(k, m, u, N)` ordering used by every
/// enumeration in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParamCombo {
    k: u32,
    m: u64,
    u: i64,
    #[serde(rename = "N")]
    n: u32,
}

impl ParamCombo {
    pub const DEFAULT_N: u32 = 2;

    /// Validates `k, m, N >= 1`, `u != 0` and `N·k >= 2`.
    pub fn new(k: u32, m: u64, u: i64, n: u32) -> Result<Self> {
        if k == 0 || m == 0 || n == 0 {
            return Err(Error::InvalidCombo(format!(
                "k, m and N must be positive (k={k}, m={m}, N={n})"
            )));
        }
        if u == 0 {
            return Err(Error::InvalidCombo("u must be nonzero".into()));
        }
        let nk = u64::from(n) * u64::from(k);
        if nk < 2 {
            return Err(Error::InvalidCombo(format!("N·k = {nk} must be at least 2")));
        }
        if nk > u64::from(u32::MAX) {
            return Err(Error::InvalidCombo(format!("N·k = {nk} is too large")));
        }
        Ok(Self { k, m, u, n })
    }

    /// Combination with the default `N = 2`.
    pub fn standard(k: u32, m: u64, u: i64) -> Result<Self> {
        Self::new(k, m, u, Self::DEFAULT_N)
    }

    /// Like [`ParamCombo::new`] but additionally requires `N·k` even, the
    /// regime in which `f(1) = f(|A|)` holds.
    pub fn symmetric(k: u32, m: u64, u: i64, n: u32) -> Result<Self> {
        let combo = Self::new(k, m, u, n)?;
        combo.require_symmetric()?;
        Ok(combo)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn nk(&self) -> u64 {
        u64::from(self.n) * u64::from(self.k)
    }

    pub fn is_symmetric(&self) -> bool {
        self.nk().is_multiple_of(2)
    }

    pub(crate) fn require_symmetric(&self) -> Result<()> {
        if self.is_symmetric() {
            Ok(())
        } else {
            Err(Error::OddNk { nk: self.nk() })
        }
    }

    fn u_pow(&self, e: u64) -> BigInt {
        BigInt::from(self.u).pow(e as u32)
    }

    /// `v = (-1)^(Nk-1) · m · u^(Nk-1)`.
    pub fn v(&self) -> BigInt {
        let nk = self.nk();
        let magnitude = BigInt::from(self.m) * self.u_pow(nk - 1);
        if (nk - 1) % 2 == 1 {
            -magnitude
        } else {
            magnitude
        }
    }

    /// `Z = m · u^(Nk-2)`, with `u` taken as given (so `Z < 0` is possible
    /// for negative `u` and odd `N·k`).
    pub fn z(&self) -> BigInt {
        BigInt::from(self.m) * self.u_pow(self.nk() - 2)
    }

    /// `A = (u + v) / u` as an exact rational, without the absolute value.
    pub fn a_ratio(&self) -> BigRational {
        let u = BigInt::from(self.u);
        BigRational::new(&u + self.v(), u)
    }

    pub fn u_is_positive(&self) -> bool {
        self.u > 0
    }

    pub(crate) fn u_big(&self) -> BigInt {
        BigInt::from(self.u)
    }
}

impl fmt::Display for ParamCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{k={},m={},u={},N={}}}", self.k, self.m, self.u, self.n)
    }
}
