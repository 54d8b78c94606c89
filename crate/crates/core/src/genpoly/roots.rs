//! Certified isolation of real roots for polynomials whose roots are all
//! real and simple.
//!
//! Every returned interval is certified by exact arithmetic: either an exact
//! zero at a rational point, or a strict sign change across an open
//! interval. The intervals are pairwise disjoint, so when their number
//! equals the degree each one holds exactly one simple root and there are no
//! others. Search points come from the roots of the derivative (recursively,
//! by Rolle's theorem) or from caller-supplied seeds. Neither source affects
//! the certificate.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::float::FloatCore;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::poly::{power_of_two_exponent, sign_of, IntPolynomial};
use crate::numeric::rational_string;
use crate::{Error, Result};

/// Upper bound on window halvings before a search is declared hopeless.
const MAX_REFINEMENT_ROUNDS: usize = 512;

/// One isolating interval. `lo == hi` marks an exact rational root;
/// otherwise the root lies strictly inside `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn exact(x: BigRational) -> Self {
        RootInterval { lo: x.clone(), hi: x }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Whether the isolated root is certainly the given value.
    pub fn is_exactly(&self, x: &BigRational) -> bool {
        self.is_exact() && &self.lo == x
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    /// Float approximation of the root (midpoint of the interval).
    pub fn approx(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Certified `root(self) < root(other)` from the intervals alone.
    pub fn certainly_below(&self, other: &RootInterval) -> bool {
        if self.is_exact() && other.is_exact() {
            qcmp(&self.lo, &other.lo).is_lt()
        } else {
            qcmp(&self.hi, &other.lo).is_le()
        }
    }
}

/// Serializable view of a [`RootInterval`] with exact endpoints as strings.
#[derive(Debug, Clone, Serialize)]
pub struct RootIntervalView {
    pub lo: String,
    pub hi: String,
    pub exact: bool,
    pub approx: f64,
}

impl From<&RootInterval> for RootIntervalView {
    fn from(r: &RootInterval) -> Self {
        RootIntervalView {
            lo: rational_string(&r.lo),
            hi: rational_string(&r.hi),
            exact: r.is_exact(),
            approx: r.approx(),
        }
    }
}

/// Isolating intervals in strictly increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootIntervals {
    pub intervals: Vec<RootInterval>,
}

impl RootIntervals {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, RootInterval> {
        self.intervals.iter()
    }

    /// Consecutive intervals are disjoint and increasing.
    pub fn is_strictly_increasing(&self) -> bool {
        self.intervals.windows(2).all(|w| w[0].certainly_below(&w[1]))
    }

    pub fn views(&self) -> Vec<RootIntervalView> {
        self.intervals.iter().map(RootIntervalView::from).collect()
    }

    /// Midpoints, useful as search seeds for a neighbouring polynomial.
    pub fn midpoints(&self) -> Vec<BigRational> {
        self.intervals.iter().map(RootInterval::midpoint).collect()
    }
}

/// Default isolation width, `2^-48`.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 48u32)
}

/// A power of two bounding the absolute value of every root (Cauchy bound).
pub fn root_bound(p: &IntPolynomial) -> BigRational {
    let Some(lead) = p.leading() else {
        return BigRational::one();
    };
    let max_bits = p.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0);
    let e = (max_bits + 1).saturating_sub(lead.bits()) + 1;
    BigRational::from_integer(BigInt::one() << e)
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

fn is_dyadic(x: &BigRational) -> bool {
    power_of_two_exponent(x.denom()).is_some()
}

/// A dyadic rational strictly inside `(a, b)`; the exact midpoint when both
/// ends are dyadic.
pub(crate) fn split_point(a: &BigRational, b: &BigRational) -> BigRational {
    debug_assert!(a < b);
    let mid = (a + b) / two();
    if is_dyadic(a) && is_dyadic(b) {
        return mid;
    }
    let gap = b - a;
    let e = (gap.denom().bits() + 1 + 1).saturating_sub(gap.numer().bits());
    let scale = BigInt::one() << e;
    let m = (&mid * BigRational::from_integer(scale.clone())).floor().to_integer();
    BigRational::new(m, scale)
}

/// Value of `p(x)` as `mantissa * 2^exp2`, good to about 53 bits.
#[derive(Debug, Clone, Copy)]
struct Approx {
    mant: f64,
    exp2: i64,
}

impl Approx {
    fn from_homogeneous(h: &BigInt, den: &BigInt, degree: usize) -> Self {
        let (mant, shift) = top_bits(h);
        let den_shift = match power_of_two_exponent(den) {
            Some(e) => (e as i64) * degree as i64,
            None => {
                let (dm, ds) = top_bits(den);
                // den^degree = dm^degree * 2^(ds*degree); dm in [2^52, 2^53).
                let norm = dm / 2f64.powi(52);
                let mut log2 = degree as f64 * norm.log2();
                let whole = log2.floor();
                log2 -= whole;
                return Approx { mant: mant / 2f64.powf(log2), exp2: shift - (ds + 52) * degree as i64 - whole as i64 };
            }
        };
        Approx { mant, exp2: shift - den_shift }
    }
}

/// Top 53 bits of `x` as a float plus the binary exponent dropped.
fn top_bits(x: &BigInt) -> (f64, i64) {
    let bits = x.bits();
    if bits <= 53 {
        return (x.to_f64().unwrap_or(0.0), 0);
    }
    let shift = bits - 53;
    ((x >> shift).to_f64().unwrap_or(0.0), shift as i64)
}

/// Rational comparison by cross-multiplication (denominators are positive).
pub(crate) fn qcmp(a: &BigRational, b: &BigRational) -> Ordering {
    if a.denom() == b.denom() {
        return a.numer().cmp(b.numer());
    }
    (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
}

/// Evaluation point with its exact sign and approximate value.
#[derive(Debug, Clone)]
struct Sample {
    x: BigRational,
    sign: i32,
}

fn sample(p: &IntPolynomial, x: BigRational) -> Sample {
    let sign = p.sign_at(&x);
    Sample { x, sign }
}

/// Certified roots read off sorted samples: exact zeros, plus strict sign
/// changes between consecutive nonzero samples.
#[derive(Debug, Clone)]
enum Certified {
    Exact(BigRational),
    /// Open interval `(lo, hi)` with `sign(p(lo)) == lo_sign != 0` and
    /// `sign(p(hi)) == -lo_sign`.
    Open {
        lo: BigRational,
        hi: BigRational,
        lo_sign: i32,
    },
}

impl Certified {
    fn into_interval(self) -> RootInterval {
        match self {
            Certified::Exact(x) => RootInterval::exact(x),
            Certified::Open { lo, hi, .. } => RootInterval { lo, hi },
        }
    }
}

fn certify(samples: &[Sample]) -> Vec<Certified> {
    let mut out = Vec::new();
    for (i, s) in samples.iter().enumerate() {
        if s.sign == 0 {
            out.push(Certified::Exact(s.x.clone()));
        }
        if let Some(next) = samples.get(i + 1) {
            if s.sign != 0 && next.sign != 0 && s.sign != next.sign {
                out.push(Certified::Open { lo: s.x.clone(), hi: next.x.clone(), lo_sign: s.sign });
            }
        }
    }
    out
}

fn insert_sample(samples: &mut Vec<Sample>, s: Sample) {
    match samples.binary_search_by(|probe| qcmp(&probe.x, &s.x)) {
        Ok(_) => {}
        Err(pos) => samples.insert(pos, s),
    }
}

/// A window known to contain exactly one root of the derivative.
#[derive(Debug, Clone)]
struct Window {
    lo: BigRational,
    hi: BigRational,
    deriv_lo_sign: i32,
}

/// Isolates all `deg q` roots of `q`, assumed real, simple and inside
/// `[lo, hi]`. `extra` points are added to the samples up front.
fn isolate_in(q: &IntPolynomial, lo: &BigRational, hi: &BigRational, extra: &[BigRational]) -> Result<Vec<Certified>> {
    let d = q.degree().ok_or_else(|| Error::RootIsolation("zero polynomial".into()))?;
    let mut samples = Vec::new();
    for x in [lo, hi].into_iter().chain(extra.iter().filter(|x| qcmp(x, lo).is_ge() && qcmp(x, hi).is_le())) {
        insert_sample(&mut samples, sample(q, x.clone()));
    }
    if d == 0 {
        return Ok(Vec::new());
    }

    let certs = certify(&samples);
    if certs.len() == d {
        return Ok(certs);
    }

    let mut windows = Vec::new();
    if d >= 2 {
        let dq = q.derivative();
        for c in isolate_in(&dq, lo, hi, &[])? {
            match c {
                Certified::Exact(x) => insert_sample(&mut samples, sample(q, x)),
                Certified::Open { lo: a, hi: b, lo_sign } => {
                    insert_sample(&mut samples, sample(q, a.clone()));
                    insert_sample(&mut samples, sample(q, b.clone()));
                    windows.push(Window { lo: a, hi: b, deriv_lo_sign: lo_sign });
                }
            }
        }
    }

    let dq = q.derivative();
    for _ in 0..MAX_REFINEMENT_ROUNDS {
        let certs = certify(&samples);
        match certs.len().cmp(&d) {
            Ordering::Equal => return Ok(certs),
            Ordering::Greater => {
                return Err(Error::RootIsolation(format!(
                    "found {} sign certificates for a degree-{d} polynomial",
                    certs.len()
                )))
            }
            Ordering::Less => {}
        }
        // A window without a strict sign change may still hide a root next
        // to its critical point; split it, keeping the half where the
        // derivative changes sign.
        let mut progressed = false;
        let mut next_windows = Vec::with_capacity(windows.len());
        for w in windows.drain(..) {
            let sign_at =
                |x: &BigRational| samples.binary_search_by(|s| qcmp(&s.x, x)).map(|i| samples[i].sign).unwrap_or(0);
            let (sa, sb) = (sign_at(&w.lo), sign_at(&w.hi));
            if sa != 0 && sb != 0 && sa != sb {
                continue;
            }
            progressed = true;
            let m = split_point(&w.lo, &w.hi);
            insert_sample(&mut samples, sample(q, m.clone()));
            match dq.sign_at(&m) {
                0 => {}
                s if s == w.deriv_lo_sign => next_windows.push(Window { lo: m, hi: w.hi, deriv_lo_sign: s }),
                _ => next_windows.push(Window { lo: w.lo, hi: m, deriv_lo_sign: w.deriv_lo_sign }),
            }
        }
        windows = next_windows;
        if !progressed {
            break;
        }
    }
    let found = certify(&samples).len();
    Err(Error::RootIsolation(format!(
        "certified {found} of {d} roots in [{}, {}]; the polynomial is not simple-real-rooted there",
        rational_string(lo),
        rational_string(hi)
    )))
}

/// `k` with `2^-k <= x / 2^extra`, for positive `x`.
fn grid_exponent(x: &BigRational, extra: u64) -> u64 {
    (x.denom().bits() + 1 + extra).saturating_sub(x.numer().bits())
}

/// Points `n / D` on a fixed fine grid, `D = L 2^K`, so that refinement
/// runs on integers. Grid level `k <= K` consists of the multiples of
/// `L 2^(K-k)`, i.e. the dyadics `m / 2^k`.
struct FineGrid<'a> {
    q: &'a IntPolynomial,
    degree: usize,
    odd: BigInt,
    k_max: u64,
    denom: BigInt,
}

impl FineGrid<'_> {
    fn to_units(&self, x: &BigRational) -> BigInt {
        x.numer() * (&self.denom / x.denom())
    }

    fn to_rational(&self, n: &BigInt) -> BigRational {
        BigRational::new(n.clone(), self.denom.clone())
    }

    fn cell(&self, k: u64) -> BigInt {
        &self.odd << (self.k_max - k.min(self.k_max))
    }

    /// Rounds to the nearest multiple of `cell(k)`.
    fn snap(&self, n: &BigInt, k: u64) -> BigInt {
        let c = self.cell(k);
        let half = &c >> 1u32;
        let shifted = n + half;
        let r = shifted.mod_floor(&c);
        shifted - r
    }

    /// Sign and approximate value of `q` at `n / D`.
    fn eval(&self, n: &BigInt) -> (i32, Approx) {
        let g = n.gcd(&self.denom);
        let (num, den) = if g.is_one() { (n.clone(), self.denom.clone()) } else { (n / &g, &self.denom / &g) };
        let h = self.q.eval_homogeneous(&num, &den);
        (sign_of(&h), Approx::from_homogeneous(&h, &den, self.degree))
    }
}

/// Shrinks an open certificate to width at most `width`, or hits the root
/// exactly.
///
/// Secant steps through the two latest points, kept inside the bracket and
/// snapped to a dyadic grid a few bits finer than the bracket (cheap early
/// evaluations). Once a step is within two final grid cells the root is
/// straddled by the grid points on either side of the estimate. Every fourth
/// round bisects unless the bracket halved meanwhile.
fn refine(q: &IntPolynomial, cert: Certified, width: &BigRational) -> Certified {
    let Certified::Open { lo, hi, lo_sign } = cert else {
        return cert;
    };
    debug_assert!(width.is_positive());
    let k_final = grid_exponent(width, 2);
    let odd = lo.denom().lcm(hi.denom());
    let k_max = k_final + 2;
    let grid = FineGrid { q, degree: q.degree().unwrap_or(0), denom: &odd << k_max, odd, k_max };
    // span > width  <=>  span * width_den > width_num * D
    let limit = width.numer() * &grid.denom;
    let too_wide = |lo: &BigInt, hi: &BigInt| (hi - lo) * width.denom() > limit;

    let (mut lo, mut hi) = (grid.to_units(&lo), grid.to_units(&hi));
    let mut prev = (lo.clone(), grid.eval(&lo).1);
    let mut cur = (hi.clone(), grid.eval(&hi).1);
    let mut round = 0usize;
    let mut checkpoint = &hi - &lo;
    let final_cell = grid.cell(k_final);

    while too_wide(&lo, &hi) {
        round += 1;
        let span = &hi - &lo;
        let bisect = round.is_multiple_of(4) && &span * 2u32 > checkpoint;
        if round.is_multiple_of(4) {
            checkpoint = span.clone();
        }
        let estimate = if bisect { None } else { secant_units(&prev, &cur) }.filter(|e| *e > lo && *e < hi);

        let mut points = Vec::with_capacity(2);
        match &estimate {
            Some(e) if (e - &cur.0).abs() <= &final_cell * 2u32 => {
                let c = grid.snap(e, k_final);
                points.extend([&c - &final_cell, &c + &final_cell]);
            }
            Some(e) => {
                let k = (grid.denom.bits() + 1 + 12).saturating_sub(span.bits()).min(k_final);
                let x = grid.snap(e, k);
                let step = grid.cell(k);
                // An estimate snapping onto an end moves one grid step inside.
                points.push(if x <= lo {
                    &lo + &step
                } else if x >= hi {
                    &hi - &step
                } else {
                    x
                });
            }
            None => {}
        }
        points.retain(|x| *x > lo && *x < hi);
        if points.is_empty() {
            points.push((&lo + &hi) >> 1u32);
        }
        for x in points {
            if !(x > lo && x < hi) {
                continue;
            }
            let (s, fx) = grid.eval(&x);
            if s == 0 {
                return Certified::Exact(grid.to_rational(&x));
            }
            if s == lo_sign {
                lo = x.clone();
            } else {
                hi = x.clone();
            }
            prev = std::mem::replace(&mut cur, (x, fx));
        }
    }
    Certified::Open { lo: grid.to_rational(&lo), hi: grid.to_rational(&hi), lo_sign }
}

/// Bits of relative precision every open interval gets: its width is at
/// most `2^-RELATIVE_BITS` times its distance from zero.
const RELATIVE_BITS: u64 = 16;

/// Narrows an open certificate until it excludes zero and its width is small
/// relative to its distance from zero, so that tiny roots are located as
/// well as large ones.
fn refine_relative(q: &IntPolynomial, mut cert: Certified) -> Certified {
    loop {
        let Certified::Open { lo, hi, lo_sign } = &cert else {
            return cert;
        };
        if lo.is_negative() && hi.is_positive() {
            let zero = BigRational::zero();
            cert = match q.sign_at(&zero) {
                0 => Certified::Exact(zero),
                s if s == *lo_sign => Certified::Open { lo: zero, hi: hi.clone(), lo_sign: *lo_sign },
                _ => Certified::Open { lo: lo.clone(), hi: zero, lo_sign: *lo_sign },
            };
            continue;
        }
        let near = if lo.is_zero() || hi.is_zero() {
            lo.abs().max(hi.abs())
        } else if lo.is_negative() {
            hi.abs()
        } else {
            lo.abs()
        };
        let target = near / BigRational::from_integer(BigInt::one() << RELATIVE_BITS);
        if qcmp(&(hi - lo), &target).is_le() {
            return cert;
        }
        cert = refine(q, cert, &target);
    }
}

/// Zero of the line through two points, if the slope is usable.
fn secant_units(a: &(BigInt, Approx), b: &(BigInt, Approx)) -> Option<BigInt> {
    let (fa, fb) = (a.1, b.1);
    // x_b - f_b (x_b - x_a) / (f_b - f_a) = x_b - r (x_b - x_a), r = 1 / (1 - f_a / f_b).
    let diff = (fa.exp2 - fb.exp2).clamp(-1000, 1000) as i32;
    let ratio = fa.mant / fb.mant * 2f64.powi(diff);
    let r = 1.0 / (1.0 - ratio);
    if !r.is_finite() {
        return None;
    }
    let (mant, exp, sign) = r.integer_decode();
    let mut step = (&b.0 - &a.0) * BigInt::from(mant);
    step = if exp >= 0 { step << exp as u32 } else { step >> (-exp) as u32 };
    Some(if sign < 0 { &b.0 + step } else { &b.0 - step })
}

/// Isolates every real root of `p`, all of which must lie in the closed
/// `bracket`, into intervals of width at most `width`.
///
/// Fails when fewer than `deg p` roots can be certified, which means `p` is
/// not simple-real-rooted inside the bracket.
pub fn isolate_real_roots(
    p: &IntPolynomial,
    bracket: (&BigRational, &BigRational),
    width: &BigRational,
) -> Result<RootIntervals> {
    isolate_real_roots_seeded(p, bracket, width, &[])
}

/// As [`isolate_real_roots`], trying the `seeds` as split points first.
/// Seeds that interlace with the roots (for example the roots of a
/// neighbouring polynomial in an interlacing family) make the search cheap.
pub fn isolate_real_roots_seeded(
    p: &IntPolynomial,
    bracket: (&BigRational, &BigRational),
    width: &BigRational,
    seeds: &[BigRational],
) -> Result<RootIntervals> {
    let (lo, hi) = bracket;
    if lo > hi {
        return Err(Error::domain("empty bracket"));
    }
    if !width.is_positive() {
        return Err(Error::domain("isolation width must be positive"));
    }
    if p.is_zero() {
        return Err(Error::RootIsolation("zero polynomial".into()));
    }
    let zero_mult = p.zero_multiplicity();
    if zero_mult > 1 {
        return Err(Error::RootIsolation(format!("x = 0 is a root of multiplicity {zero_mult}")));
    }
    let zero = BigRational::zero();
    let zero_inside = lo <= &zero && &zero <= hi;
    if zero_mult == 1 && !zero_inside {
        return Err(Error::RootIsolation("x = 0 is a root outside the bracket".into()));
    }
    let q = p.deflate_zero(zero_mult);

    let mut extra: Vec<BigRational> = seeds.to_vec();
    if zero_mult == 1 {
        // Keeps every certificate of q off the root of p at zero.
        extra.push(zero.clone());
    }
    let certs = isolate_in(&q, lo, hi, &extra)?;
    let mut intervals: Vec<RootInterval> =
        certs.into_iter().map(|c| refine_relative(&q, refine(&q, c, width)).into_interval()).collect();
    if zero_mult == 1 {
        intervals.push(RootInterval::exact(zero));
    }
    intervals.sort_by(|a, b| qcmp(&a.lo, &b.lo));
    Ok(RootIntervals { intervals })
}

/// Narrows one isolating interval of `p` to width at most `width`.
pub fn refine_interval(p: &IntPolynomial, interval: &RootInterval, width: &BigRational) -> RootInterval {
    if interval.is_exact() {
        return interval.clone();
    }
    let q = p.deflate_zero(p.zero_multiplicity());
    let lo_sign = q.sign_at(&interval.lo);
    let cert = Certified::Open { lo: interval.lo.clone(), hi: interval.hi.clone(), lo_sign };
    refine_relative(&q, refine(&q, cert, width)).into_interval()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genpoly::poly::{s_star_poly, tree_poly};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn contains(r: &RootInterval, x: &BigRational) -> bool {
        if r.is_exact() {
            &r.lo == x
        } else {
            &r.lo < x && x < &r.hi
        }
    }

    #[test]
    fn s4_roots() {
        let p = s_star_poly(4).unwrap();
        let roots = isolate_real_roots(&p, (&q(-1, 1), &q(0, 1)), &default_width()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(contains(&roots.intervals[0], &q(-1, 3)));
        assert!(roots.intervals[1].is_exactly(&q(0, 1)));
        assert!(roots.intervals[0].width() <= default_width());
    }

    #[test]
    fn s5_roots() {
        let p = s_star_poly(5).unwrap();
        let b = root_bound(&p);
        let roots = isolate_real_roots(&p, (&-b, &q(0, 1)), &default_width()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(contains(&roots.intervals[0], &q(-1, 10)));
        assert!(roots.intervals[1].is_exactly(&q(0, 1)));
    }

    #[test]
    fn p2_roots() {
        let p = tree_poly(2);
        let roots = isolate_real_roots(&p, (&q(-1, 1), &q(0, 1)), &default_width()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(contains(&roots.intervals[0], &q(-1, 3)));
    }

    #[test]
    fn exact_dyadic_root_is_found() {
        // (2x + 1)(4x - 3) has roots -1/2 and 3/4.
        let p = IntPolynomial::from_i64(&[-3, -2, 8]);
        let roots = isolate_real_roots(&p, (&q(-1, 1), &q(1, 1)), &default_width()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.intervals.iter().any(|r| contains(r, &q(-1, 2))));
        assert!(roots.intervals.iter().any(|r| contains(r, &q(3, 4))));
    }

    #[test]
    fn complex_roots_fail_loudly() {
        // x^2 + 1
        let p = IntPolynomial::from_i64(&[1, 0, 1]);
        let err = isolate_real_roots(&p, (&q(-4, 1), &q(4, 1)), &default_width()).unwrap_err();
        assert!(matches!(err, Error::RootIsolation(_)));
    }

    #[test]
    fn root_outside_bracket_fails() {
        let p = IntPolynomial::from_i64(&[-3, -2, 8]);
        assert!(isolate_real_roots(&p, (&q(-1, 1), &q(1, 2)), &default_width()).is_err());
    }

    #[test]
    fn double_root_fails() {
        // (x + 1)^2
        let p = IntPolynomial::from_i64(&[1, 2, 1]);
        assert!(isolate_real_roots(&p, (&q(-4, 1), &q(4, 1)), &default_width()).is_err());
        let p = IntPolynomial::from_i64(&[0, 0, 1]);
        assert!(isolate_real_roots(&p, (&q(-4, 1), &q(4, 1)), &default_width()).is_err());
    }

    #[test]
    fn non_dyadic_bracket_endpoints() {
        // (3x + 2)(3x - 1): roots exactly at both bracket ends.
        let p = IntPolynomial::from_i64(&[-2, 3, 9]);
        let roots = isolate_real_roots(&p, (&q(-2, 3), &q(1, 3)), &default_width()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.intervals[0].is_exactly(&q(-2, 3)));
        assert!(roots.intervals[1].is_exactly(&q(1, 3)));
    }

    #[test]
    fn clustered_roots_are_separated() {
        // Roots 1/1000 and 1/1001: (1000x - 1)(1001x - 1).
        let p = IntPolynomial::from_i64(&[1, -2001, 1_001_000]);
        let roots = isolate_real_roots(&p, (&q(-1, 1), &q(1, 1)), &default_width()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(contains(&roots.intervals[0], &q(1, 1001)));
        assert!(contains(&roots.intervals[1], &q(1, 1000)));
        assert!(roots.is_strictly_increasing());
    }

    #[test]
    fn seeded_and_unseeded_agree_on_containment() {
        let p = tree_poly(30);
        let prev = tree_poly(29);
        let w = default_width();
        let prev_roots = isolate_real_roots(&prev, (&q(-1, 1), &q(0, 1)), &w).unwrap();
        let seeded = isolate_real_roots_seeded(&p, (&q(-1, 1), &q(0, 1)), &w, &prev_roots.midpoints()).unwrap();
        let plain = isolate_real_roots(&p, (&q(-1, 1), &q(0, 1)), &w).unwrap();
        assert_eq!(seeded.len(), 30);
        assert_eq!(plain.len(), 30);
        for (a, b) in seeded.iter().zip(plain.iter()) {
            // Both isolate the same root, so the intervals overlap.
            assert!(a.lo <= b.hi && b.lo <= a.hi);
        }
    }

    #[test]
    fn refine_interval_narrows() {
        let p = s_star_poly(12).unwrap();
        let b = root_bound(&p);
        let coarse = q(1, 1 << 10);
        let roots = isolate_real_roots(&p, (&-b, &q(0, 1)), &coarse).unwrap();
        let fine = default_width();
        for r in roots.iter() {
            let narrowed = refine_interval(&p, r, &fine);
            assert!(narrowed.width() <= fine);
            assert!(narrowed.lo >= r.lo && narrowed.hi <= r.hi);
        }
    }

    #[test]
    fn split_point_is_strictly_inside() {
        for (a, b) in
            [(q(-1, 3), q(-1, 10)), (q(1, 7), q(2, 7)), (q(0, 1), q(1, 1 << 20)), (q(5, 3), q(5000001, 3000000))]
        {
            let m = split_point(&a, &b);
            assert!(a < m && m < b, "{a} {m} {b}");
            assert!(is_dyadic(&m));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn products_of_linear_factors(roots in prop::collection::btree_set((-40i64..40, 1i64..9), 1..7)) {
            // Distinct rational roots a/b; build prod (b x - a).
            let mut values: Vec<BigRational> = roots.iter().map(|&(a, b)| q(a, b)).collect();
            values.sort();
            values.dedup();
            let mut p = IntPolynomial::one();
            for v in &values {
                let factor = IntPolynomial::new(vec![-v.numer().clone(), v.denom().clone()]);
                p = &p * &factor;
            }
            let bound = root_bound(&p);
            let w = q(1, 1 << 30);
            let iso = isolate_real_roots(&p, (&-bound.clone(), &bound), &w).unwrap();
            prop_assert_eq!(iso.len(), values.len());
            prop_assert!(iso.is_strictly_increasing());
            for (r, v) in iso.iter().zip(values.iter()) {
                prop_assert!(contains(r, v), "{} not in ({}, {})", v, r.lo, r.hi);
                prop_assert!(r.width() <= w);
            }
        }
    }
}
