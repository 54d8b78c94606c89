//! Row distributions `P(Z_n = k) = A(n,k) / A_n(1)` and their statistics.
//!
//! Means and variances are exact rationals, from the row generating
//! polynomial `A_n(x) = sum_k A(n,k) x^k`:
//!
//! ```text
//! E(Z_n)   = A'(1) / A(1)
//! D^2(Z_n) = A''(1) / A(1) + E - E^2
//! ```
//!
//! and independently from ratios of row sums. Limit checks compare the
//! standardized row with the normal law.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::bigcount::{bell, bell_star, schroeder_t, Row, RowStream, TriangleFamily};
use crate::numeric::{rational_string, rational_to_f64, to_bigint};
use crate::{Error, Result};

/// Row distributions. `F` and `FStar` reflect `S` and `SStar`; row `n` of `T`
/// is the coefficient row of `P_n`, i.e. `T_{n+1,.}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    S,
    SStar,
    F,
    FStar,
    T,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::S, Family::SStar, Family::F, Family::FStar, Family::T];

    pub fn tag(self) -> &'static str {
        match self {
            Family::S => "s",
            Family::SStar => "sstar",
            Family::F => "f",
            Family::FStar => "fstar",
            Family::T => "t",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// The triangle the rows are read from.
    pub fn triangle(self) -> TriangleFamily {
        match self {
            Family::S | Family::F => TriangleFamily::StirlingS,
            Family::SStar | Family::FStar => TriangleFamily::StirlingStar,
            Family::T => TriangleFamily::Ttriangle,
        }
    }

    pub fn first_index(self) -> u32 {
        1
    }

    /// Row of [`Family::triangle`] holding this family's row `n`.
    pub fn triangle_index(self, n: u32) -> u32 {
        match self {
            Family::T => n + 1,
            _ => n,
        }
    }

    /// Converts a triangle row into this family's row `n`.
    pub fn view(self, row: Row) -> Row {
        match self {
            Family::S | Family::SStar => row,
            Family::T => Row { n: row.n - 1, ..row },
            Family::F | Family::FStar => {
                let k_min = (row.n + 1).saturating_sub(row.k_max()).max(1);
                let mut values = row.values;
                values.reverse();
                Row { n: row.n, k_min, values }
            }
        }
    }

    /// Rows `from, from+1, ...`, computed on the fly without any cache.
    pub fn rows_from(self, from: u32) -> impl Iterator<Item = Row> {
        let tri = self.triangle();
        let start = self.triangle_index(from.max(self.first_index()));
        let stream: RowStream = tri.rows();
        stream.skip((start - tri.first_row()) as usize).map(move |r| self.view(r))
    }

    /// Row `n` computed from scratch.
    pub fn row(self, n: u32) -> Result<Row> {
        if n < self.first_index() {
            return Err(Error::domain(format!("{self} rows start at n = {}", self.first_index())));
        }
        Ok(self.rows_from(n).next().expect("row stream is infinite"))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

fn exact<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

/// Exact mean and variance of one row, with float renditions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistStats {
    pub n: u32,
    pub family: Family,
    #[serde(serialize_with = "exact")]
    pub mean: BigRational,
    #[serde(serialize_with = "exact")]
    pub variance: BigRational,
    pub mean_f: f64,
    pub var_f: f64,
}

impl DistStats {
    fn new(family: Family, n: u32, mean: BigRational, variance: BigRational) -> Self {
        let mean_f = rational_to_f64(&mean);
        let var_f = rational_to_f64(&variance);
        DistStats { n, family, mean, variance, mean_f, var_f }
    }

    pub fn std_dev(&self) -> f64 {
        self.var_f.sqrt()
    }

    /// Statistics of the reflected row `k -> n + 1 - k`.
    fn reflected(self, family: Family) -> Self {
        let n1 = BigRational::from_integer(BigInt::from(self.n + 1));
        DistStats::new(family, self.n, n1 - self.mean, self.variance)
    }
}

fn ratio(a: &BigUint, b: &BigUint) -> BigRational {
    BigRational::new(to_bigint(a), to_bigint(b))
}

fn int(n: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Mean and variance from the factorial moments of `row`.
pub fn stats_of_row(family: Family, row: &Row) -> Result<DistStats> {
    if row.is_empty() {
        return Err(Error::domain(format!("{family} row {} is empty", row.n)));
    }
    let (mut a0, mut a1, mut a2) = (BigUint::zero(), BigUint::zero(), BigUint::zero());
    for (k, v) in row.entries() {
        let k = u64::from(k);
        a0 += v;
        a1 += v * k;
        if k >= 2 {
            a2 += v * (k * (k - 1));
        }
    }
    let mean = ratio(&a1, &a0);
    let variance = ratio(&a2, &a0) + &mean - &mean * &mean;
    Ok(DistStats::new(family, row.n, mean, variance))
}

/// Exact statistics of row `n` through the generating polynomial.
pub fn row_stats_pgf(family: Family, n: u32) -> Result<DistStats> {
    stats_of_row(family, &family.row(n)?)
}

/// `E = B_{n+1}/B_n - 1`, `D^2 = B_{n+2}/B_n - (B_{n+1}/B_n)^2 - 1`.
pub fn stats_s_closed(n: u32) -> Result<DistStats> {
    if n < 1 {
        return Err(Error::domain("stats_s_closed requires n >= 1"));
    }
    let (b0, b1, b2) = (bell(n)?, bell(n + 1)?, bell(n + 2)?);
    let q1 = ratio(&b1, &b0);
    let one = BigRational::one();
    let variance = ratio(&b2, &b0) - &q1 * &q1 - &one;
    Ok(DistStats::new(Family::S, n, q1 - one, variance))
}

/// Statistics of `S*(n,.)` from `B*_{n-2}, ..., B*_{n+2}`.
pub fn stats_sstar_closed(n: u32) -> Result<DistStats> {
    if n < 4 {
        return Err(Error::domain("stats_sstar_closed requires n >= 4"));
    }
    let b = |i: u32| bell_star(i);
    let (bm2, bm1, b0, b1, b2) = (b(n - 2)?, b(n - 1)?, b(n)?, b(n + 1)?, b(n + 2)?);
    let up = ratio(&b1, &b0);
    let down = ratio(&bm1, &b0);
    let nn = int(n);
    let mean = &up - &nn * &down;
    let variance =
        ratio(&b2, &b0) + int(2) * &nn * ratio(&(&b1 * &bm1), &(&b0 * &b0)) + &nn * int(n - 1) * ratio(&bm2, &b0)
            - &up * &up
            - &nn * &nn * &down * &down
            - &nn * &down
            - int(2 * n + 1);
    Ok(DistStats::new(Family::SStar, n, mean, variance))
}

/// Statistics of `T_{n+1,.}` from `t_{n+1}, t_{n+2}, t_{n+3}`.
pub fn stats_t_closed(n: u32) -> Result<DistStats> {
    if n < 1 {
        return Err(Error::domain("stats_t_closed requires n >= 1"));
    }
    let (t1, t2, t3) = (schroeder_t(n + 1)?, schroeder_t(n + 2)?, schroeder_t(n + 3)?);
    let q = ratio(&t2, &t1);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let quarter = &half * &half;
    let mean = &q * &half - int(n + 1) * &half;
    let variance = ratio(&t3, &t1) * &quarter - &q * &q * &quarter - &q * &half - int(n + 1) * &quarter;
    Ok(DistStats::new(Family::T, n, mean, variance))
}

/// Statistics from row sums alone; `F` and `F*` by reflection.
pub fn stats_closed(family: Family, n: u32) -> Result<DistStats> {
    match family {
        Family::S => stats_s_closed(n),
        Family::SStar => stats_sstar_closed(n),
        Family::T => stats_t_closed(n),
        Family::F => Ok(stats_s_closed(n)?.reflected(Family::F)),
        Family::FStar => Ok(stats_sstar_closed(n)?.reflected(Family::FStar)),
    }
}

/// `1/sqrt(2 pi)`, the limit of the local limit ratio.
pub const LLT_TARGET: f64 = 0.398_942_280_401_432_7;

/// Standard normal distribution function, through `erfc` (absolute error
/// well below `1e-15`).
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// `num / den` for `num <= den`, rounded once.
fn unit_fraction(num: &BigUint, den: &BigUint) -> f64 {
    let q: BigUint = (num << 64u32) / den;
    q.to_f64().expect("below 2^65") * 2f64.powi(-64)
}

/// Distance to the normal law and local-limit behaviour at the mode.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitReport {
    pub n: u32,
    pub family: Family,
    /// `sup_x |F_n(x) - Phi(x)|` for the standardized row distribution.
    pub sup_cdf_distance: f64,
    /// `D(Z_n) A(n,J_n) / A_n(1)`.
    pub llt_value_at_mode: f64,
    /// `J_n`, the smallest maximizing index.
    pub mode_index: u32,
    /// `(J_n - E) / D`.
    pub mode_offset: f64,
    /// Set when several indices attain the maximum.
    pub mode_tied: bool,
}

impl LimitReport {
    pub fn llt_error(&self) -> f64 {
        (self.llt_value_at_mode - LLT_TARGET).abs()
    }
}

/// Limit-theorem diagnostics of a row with known statistics.
pub fn limit_report_of_row(row: &Row, stats: &DistStats) -> Result<LimitReport> {
    if !stats.variance.is_positive() {
        return Err(Error::DegenerateVariance);
    }
    let total = row.sum();
    let (mean, sd) = (stats.mean_f, stats.std_dev());

    let mut cum = BigUint::zero();
    let mut below = 0.0;
    let mut sup = 0.0f64;
    let mut mode: Option<(u32, &BigUint)> = None;
    let mut tied = false;
    for (k, v) in row.entries() {
        cum += v;
        let above = unit_fraction(&cum, &total);
        let phi = normal_cdf((f64::from(k) - mean) / sd);
        sup = sup.max((below - phi).abs()).max((above - phi).abs());
        below = above;
        match mode {
            Some((_, best)) if v < best => {}
            Some((_, best)) if v == best => tied = true,
            _ => {
                mode = Some((k, v));
                tied = false;
            }
        }
    }
    let (j, a_j) = mode.expect("row is nonempty");
    Ok(LimitReport {
        n: stats.n,
        family: stats.family,
        sup_cdf_distance: sup,
        llt_value_at_mode: sd * unit_fraction(a_j, &total),
        mode_index: j,
        mode_offset: (f64::from(j) - mean) / sd,
        mode_tied: tied,
    })
}

pub fn limit_report(family: Family, n: u32) -> Result<LimitReport> {
    let row = family.row(n)?;
    let stats = stats_of_row(family, &row)?;
    limit_report_of_row(&row, &stats)
}

/// Statistics plus limit diagnostics; the latter are absent for point masses.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsReport {
    #[serde(flatten)]
    pub stats: DistStats,
    pub limits: Option<LimitReport>,
}

pub fn stats_report_of_row(family: Family, row: &Row) -> Result<StatsReport> {
    let stats = stats_of_row(family, row)?;
    let limits = match limit_report_of_row(row, &stats) {
        Ok(l) => Some(l),
        Err(Error::DegenerateVariance) => None,
        Err(e) => return Err(e),
    };
    Ok(StatsReport { stats, limits })
}
