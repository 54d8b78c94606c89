//! Finite-range verification of the real-rootedness and interlacing of
//! `S_n(x)` and `P_n(x)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::poly::{IntPolynomial, SStarPolys, TreePolys};
use super::roots::{
    isolate_real_roots_seeded, refine_interval, root_bound, RootInterval, RootIntervalView, RootIntervals,
};
use crate::{Error, Result};

/// Halvings attempted when two isolating intervals overlap.
const MAX_SEPARATION_STEPS: usize = 256;

/// Roots of one polynomial as reported.
#[derive(Debug, Clone, Serialize)]
pub struct PolyRoots {
    pub label: String,
    pub degree: usize,
    pub roots: Vec<RootIntervalView>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InterlacingReport {
    pub n: u32,
    pub passed: bool,
    pub failure: Option<String>,
    pub polynomials: Vec<PolyRoots>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TreeRootReport {
    pub n: u32,
    pub passed: bool,
    pub failure: Option<String>,
    pub polynomial: PolyRoots,
}

/// A polynomial with its isolated roots, or the isolation error.
struct Isolated {
    label: String,
    poly: IntPolynomial,
    roots: std::result::Result<Vec<RootInterval>, String>,
}

impl Isolated {
    fn view(&self) -> PolyRoots {
        PolyRoots {
            label: self.label.clone(),
            degree: self.poly.degree().unwrap_or(0),
            roots: match &self.roots {
                Ok(r) => r.iter().map(RootIntervalView::from).collect(),
                Err(_) => Vec::new(),
            },
        }
    }
}

fn zero() -> BigRational {
    BigRational::zero()
}

/// Isolates a stream of polynomials, seeding each from its predecessor.
fn isolate_stream(
    polys: impl Iterator<Item = (String, IntPolynomial)>,
    bracket_lo: impl Fn(&IntPolynomial) -> BigRational,
    width: &BigRational,
) -> Vec<Isolated> {
    let mut out: Vec<Isolated> = Vec::new();
    let mut seeds: Vec<BigRational> = Vec::new();
    for (label, poly) in polys {
        let lo = bracket_lo(&poly);
        let roots = if poly.is_zero() {
            Ok(Vec::new())
        } else {
            isolate_real_roots_seeded(&poly, (&lo, &zero()), width, &seeds)
                .map(|r| r.intervals)
                .map_err(|e| e.to_string())
        };
        seeds = match &roots {
            Ok(r) => RootIntervals { intervals: r.clone() }.midpoints(),
            Err(_) => Vec::new(),
        };
        out.push(Isolated { label, poly, roots });
    }
    out
}

/// `S_1 ..= S_m_max` with isolated roots on `[-B, 0]`.
fn s_star_roots(m_max: u32, width: &BigRational) -> Vec<Isolated> {
    let polys = SStarPolys::new().take(m_max as usize).enumerate().map(|(i, p)| (format!("S_{}", i + 1), p));
    isolate_stream(polys, |p| -root_bound(p), width)
}

/// Certifies `root(a) < root(b)`, narrowing overlapping intervals as needed.
fn separate(pa: &IntPolynomial, a: &mut RootInterval, pb: &IntPolynomial, b: &mut RootInterval) -> bool {
    let two = BigRational::from_integer(BigInt::from(2));
    for _ in 0..MAX_SEPARATION_STEPS {
        if a.certainly_below(b) {
            return true;
        }
        if a.is_exact() && b.is_exact() {
            return false;
        }
        if !a.is_exact() {
            *a = refine_interval(pa, a, &(a.width() / &two));
        }
        if !b.is_exact() {
            *b = refine_interval(pb, b, &(b.width() / &two));
        }
    }
    false
}

/// Reference to root `index` (0-based) of polynomial `poly` in a chain.
#[derive(Clone, Copy)]
struct Link {
    poly: usize,
    index: usize,
}

fn link_label(isolated: &[Isolated], l: Link) -> String {
    format!("root {} of {}", l.index + 1, isolated[l.poly].label)
}

fn check_strict_chain(
    isolated: &[Isolated],
    roots: &mut [Vec<RootInterval>],
    chain: &[Link],
) -> std::result::Result<(), String> {
    for w in chain.windows(2) {
        let (x, y) = (w[0], w[1]);
        let mut a = roots[x.poly][x.index].clone();
        let mut b = roots[y.poly][y.index].clone();
        let ok = separate(&isolated[x.poly].poly, &mut a, &isolated[y.poly].poly, &mut b);
        roots[x.poly][x.index] = a;
        roots[y.poly][y.index] = b;
        if !ok {
            return Err(format!("{} < {} not certified", link_label(isolated, x), link_label(isolated, y)));
        }
    }
    Ok(())
}

fn expect_zero(isolated: &[Isolated], roots: &[Vec<RootInterval>], l: Link) -> std::result::Result<(), String> {
    if roots[l.poly][l.index].is_exactly(&zero()) {
        Ok(())
    } else {
        Err(format!("{} is not the root 0", link_label(isolated, l)))
    }
}

/// Checks both interlacing chains for `S_{2n-1}, S_{2n}, S_{2n+1}`, given
/// as `isolated[0..3]`.
fn interlacing_chains(isolated: &mut [Isolated], n: usize) -> std::result::Result<(), String> {
    let mut roots = Vec::with_capacity(3);
    for iso in isolated.iter() {
        roots.push(iso.roots.clone().map_err(|e| format!("{}: {e}", iso.label))?);
    }
    for (i, expected) in [n - 1, n, n].into_iter().enumerate() {
        if roots[i].len() != expected {
            return Err(format!("{} has {} roots, expected {expected}", isolated[i].label, roots[i].len()));
        }
    }
    let (alpha, beta, alpha_next) = (0, 1, 2);
    let at = |poly, index| Link { poly, index };

    // beta_1 < alpha_1 < ... < beta_{n-1} < alpha_{n-1} = 0 = beta_n
    let chain: Vec<Link> = (0..n - 1).flat_map(|i| [at(beta, i), at(alpha, i)]).collect();
    check_strict_chain(isolated, &mut roots, &chain)?;
    expect_zero(isolated, &roots, at(alpha, n - 2))?;
    expect_zero(isolated, &roots, at(beta, n - 1))?;

    // beta_1 < alpha'_1 < ... < alpha'_{n-1} < beta_n = 0 = alpha'_n
    let mut chain: Vec<Link> = (0..n - 1).flat_map(|i| [at(beta, i), at(alpha_next, i)]).collect();
    chain.push(at(beta, n - 1));
    check_strict_chain(isolated, &mut roots, &chain)?;
    expect_zero(isolated, &roots, at(alpha_next, n - 1))?;

    for (iso, r) in isolated.iter_mut().zip(roots) {
        iso.roots = Ok(r);
    }
    Ok(())
}

fn interlacing_report(window: &mut [Isolated], n: u32) -> InterlacingReport {
    let result = interlacing_chains(window, n as usize);
    InterlacingReport {
        n,
        passed: result.is_ok(),
        failure: result.err(),
        polynomials: window.iter().map(Isolated::view).collect(),
    }
}

/// Interlacing of the roots of `S_{2n-1}`, `S_{2n}` and `S_{2n+1}`.
pub fn verify_interlacing(n: u32, width: &BigRational) -> Result<InterlacingReport> {
    Ok(verify_interlacing_range(n, n, width)?.remove(0))
}

/// [`verify_interlacing`] for every `n` in `n_lo..=n_hi`, sharing the root
/// isolation of each `S_m`.
pub fn verify_interlacing_range(n_lo: u32, n_hi: u32, width: &BigRational) -> Result<Vec<InterlacingReport>> {
    if n_lo < 2 || n_lo > n_hi {
        return Err(Error::domain("interlacing needs 2 <= n_lo <= n_hi"));
    }
    let mut all = s_star_roots(2 * n_hi + 1, width);
    let mut reports = Vec::new();
    for n in n_lo..=n_hi {
        let start = 2 * n as usize - 2;
        let window = &mut all[start..start + 3];
        reports.push(interlacing_report(window, n));
    }
    Ok(reports)
}

fn tree_check(iso: &Isolated, n: u32) -> std::result::Result<(), String> {
    let roots = iso.roots.as_ref().map_err(|e| format!("{}: {e}", iso.label))?;
    if roots.len() != n as usize {
        return Err(format!("{} has {} roots, expected {n}", iso.label, roots.len()));
    }
    let minus_one = -BigRational::from_integer(BigInt::from(1));
    let (last, rest) = roots.split_last().expect("n >= 1");
    if !last.is_exactly(&zero()) {
        return Err(format!("largest root of {} is not 0", iso.label));
    }
    for (i, r) in rest.iter().enumerate() {
        let inside = if r.is_exact() { r.lo > minus_one && r.lo < zero() } else { r.lo >= minus_one && r.hi <= zero() };
        if !inside {
            return Err(format!("root {} of {} not inside (-1, 0): [{}, {}]", i + 1, iso.label, r.lo, r.hi));
        }
    }
    Ok(())
}

fn tree_report(iso: &Isolated, n: u32) -> TreeRootReport {
    let result = tree_check(iso, n);
    TreeRootReport { n, passed: result.is_ok(), failure: result.err(), polynomial: iso.view() }
}

/// `P_n` has `n` simple roots: `0` and `n - 1` inside `(-1, 0)`.
pub fn verify_tree_roots(n: u32, width: &BigRational) -> Result<TreeRootReport> {
    Ok(verify_tree_roots_range(n, n, width)?.remove(0))
}

/// [`verify_tree_roots`] for every `n` in `n_lo..=n_hi`.
pub fn verify_tree_roots_range(n_lo: u32, n_hi: u32, width: &BigRational) -> Result<Vec<TreeRootReport>> {
    if n_lo < 1 || n_lo > n_hi {
        return Err(Error::domain("tree roots need 1 <= n_lo <= n_hi"));
    }
    let minus_one = -BigRational::from_integer(BigInt::from(1));
    let polys = TreePolys::new().enumerate().skip(1).take(n_hi as usize).map(|(i, p)| (format!("P_{i}"), p));
    let isolated = isolate_stream(polys, |_| minus_one.clone(), width);
    Ok(isolated
        .iter()
        .enumerate()
        .map(|(i, iso)| (i as u32 + 1, iso))
        .filter(|(n, _)| *n >= n_lo)
        .map(|(n, iso)| tree_report(iso, n))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genpoly::roots::default_width;

    #[test]
    fn interlacing_small_case() {
        let report = verify_interlacing(2, &default_width()).unwrap();
        assert!(report.passed, "{:?}", report.failure);
        assert!((report.polynomials[1].roots[0].approx + 1.0 / 3.0).abs() < 1e-12);
        assert!((report.polynomials[2].roots[0].approx + 0.1).abs() < 1e-12);
        assert!(report.polynomials[2].roots[1].exact);
    }

    #[test]
    fn interlacing_up_to_twenty() {
        for report in verify_interlacing_range(2, 20, &default_width()).unwrap() {
            assert!(report.passed, "n = {}: {:?}", report.n, report.failure);
        }
    }

    #[test]
    fn interlacing_rejects_small_n() {
        assert!(verify_interlacing(1, &default_width()).is_err());
    }

    #[test]
    fn tree_roots_small_cases() {
        let r1 = verify_tree_roots(1, &default_width()).unwrap();
        assert!(r1.passed);
        assert_eq!(r1.polynomial.roots.len(), 1);
        let r2 = verify_tree_roots(2, &default_width()).unwrap();
        assert!(r2.passed);
        assert!((r2.polynomial.roots[0].approx + 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn tree_roots_up_to_forty() {
        for report in verify_tree_roots_range(1, 40, &default_width()).unwrap() {
            assert!(report.passed, "n = {}: {:?}", report.n, report.failure);
        }
    }

    #[test]
    fn tree_check_flags_a_root_outside() {
        // x (x + 2): root -2 lies outside (-1, 0), so isolation on [-1, 0] fails.
        let poly = IntPolynomial::from_i64(&[0, 2, 1]);
        let minus_one = -BigRational::from_integer(BigInt::from(1));
        let iso = isolate_stream(std::iter::once(("Q".to_string(), poly)), |_| minus_one.clone(), &default_width());
        assert!(tree_check(&iso[0], 2).is_err());
    }

    #[test]
    fn report_serializes() {
        let report = verify_tree_roots(3, &default_width()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"passed\":true"));
    }
}
