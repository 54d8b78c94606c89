//! Parsers for command-line values: families, index ranges, isolation
//! widths and output formats. All of them accept untrusted text.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dist_stats::Family;
use crate::{Error, Result};

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::from_tag(s.trim().to_ascii_lowercase().as_str())
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}; expected s, sstar, f, fstar or t")))
    }
}

/// Inclusive range of row indices, written `A..B`, `A..=B` or `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: u32,
    pub hi: u32,
}

impl NRange {
    pub fn single(n: u32) -> Self {
        NRange { lo: n, hi: n }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<u32> {
        self.lo..=self.hi
    }

    pub fn len(self) -> u64 {
        u64::from(self.hi - self.lo) + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }

    /// The range with its lower end raised to `min`, if anything remains.
    pub fn clamp_lo(self, min: u32) -> Option<Self> {
        (self.hi >= min).then(|| NRange { lo: self.lo.max(min), hi: self.hi })
    }
}

fn parse_index(s: &str) -> Result<u32> {
    let t = s.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("{s:?} is not a nonnegative integer")));
    }
    t.parse().map_err(|_| Error::Parse(format!("{s:?} does not fit in 32 bits")))
}

impl FromStr for NRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let range = match s.split_once("..") {
            None => NRange::single(parse_index(s)?),
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                NRange { lo: parse_index(a)?, hi: parse_index(b)? }
            }
        };
        if range.lo > range.hi {
            return Err(Error::Parse(format!("empty range {s:?}")));
        }
        Ok(range)
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// Largest `K` accepted in `2^-K`.
pub const MAX_WIDTH_EXPONENT: u32 = 4096;

/// Positive isolation width, written `2^-K`, `p/q` or `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Width(pub BigRational);

impl Width {
    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn power_of_two(k: u32) -> Self {
        Width(BigRational::new(BigInt::one(), BigInt::one() << k))
    }
}

impl Default for Width {
    fn default() -> Self {
        Width::power_of_two(48)
    }
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    let t = s.trim();
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || digits.len() > 4096 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("{s:?} is not an integer")));
    }
    t.parse().map_err(|_| Error::Parse(format!("{s:?} is not an integer")))
}

impl FromStr for Width {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let value = if let Some(exp) = t.strip_prefix("2^-") {
            let k = parse_index(exp)?;
            if k > MAX_WIDTH_EXPONENT {
                return Err(Error::Parse(format!("width exponent {k} exceeds {MAX_WIDTH_EXPONENT}")));
            }
            return Ok(Width::power_of_two(k));
        } else if let Some((p, q)) = t.split_once('/') {
            let q = parse_bigint(q)?;
            if q.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            BigRational::new(parse_bigint(p)?, q)
        } else {
            BigRational::from_integer(parse_bigint(t)?)
        };
        if !value.is_positive() {
            return Err(Error::Parse(format!("width must be positive, got {s:?}")));
        }
        Ok(Width(value))
    }
}

impl fmt::Display for Width {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.0;
        let den = q.denom();
        if q.numer().is_one() && den.magnitude().count_ones() == 1 {
            write!(f, "2^-{}", den.trailing_zeros().unwrap_or(0))
        } else {
            f.write_str(&crate::numeric::rational_string(q))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Plain,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "plain" => Ok(OutputFormat::Plain),
            _ => Err(Error::Parse(format!("unknown format {s:?}; expected csv, json or plain"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
            OutputFormat::Plain => "plain",
        })
    }
}
