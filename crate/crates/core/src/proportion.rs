use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact proportion `num / den` with `0 <= num <= den` and `den > 0`.
///
/// Stored as given (not reduced). Equality and ordering compare the rational
/// values by cross-multiplication.
#[derive(Clone, Copy)]
pub struct Proportion {
    num: u64,
    den: u64,
}

impl Proportion {
    pub const ZERO: Proportion = Proportion { num: 0, den: 1 };
    pub const HALF: Proportion = Proportion { num: 1, den: 2 };
    pub const ONE: Proportion = Proportion { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::invalid("proportion denominator must be positive"));
        }
        if num > den {
            return Err(Error::invalid(format!("proportion {num}/{den} exceeds 1")));
        }
        Ok(Self { num, den })
    }

    #[inline]
    pub fn num(self) -> u64 {
        self.num
    }

    #[inline]
    pub fn den(self) -> u64 {
        self.den
    }

    /// Least coverage `t` with `t / n >= num / den`, i.e. `ceil(num * n / den)`.
    pub fn threshold(self, n: usize) -> usize {
        let prod = self.num as u128 * n as u128;
        prod.div_ceil(self.den as u128) as usize
    }

    /// `ceil(num * x / den)` for an arbitrary nonnegative `x`.
    pub fn ceil_mul(self, x: u64) -> u64 {
        (self.num as u128 * x as u128).div_ceil(self.den as u128) as u64
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Proportion {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Proportion {}

impl PartialOrd for Proportion {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Proportion {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Debug for Proportion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Display for Proportion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Proportion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::invalid(format!("proportion '{s}' must be written i/j")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::invalid(format!("bad integer '{t}' in proportion '{s}'")))
        };
        Proportion::new(parse(a)?, parse(b)?)
    }
}

impl Serialize for Proportion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Proportion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
