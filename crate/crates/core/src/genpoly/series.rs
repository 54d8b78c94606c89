//! Bivariate power series in `z` with polynomial-in-`x` coefficients,
//! truncated after `z^N`, over exact rationals.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::TreePolys;

/// `sum_{n<=N} sum_j c[n][j] x^j z^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries2 {
    order: usize,
    coeffs: Vec<Vec<BigRational>>,
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn poly_add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = (0..a.len().max(b.len()))
        .map(|j| {
            let x = a.get(j).cloned().unwrap_or_else(BigRational::zero);
            match b.get(j) {
                Some(y) => x + y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_scale(a: &[BigRational], s: &BigRational) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = a.iter().map(|x| x * s).collect();
    trim(&mut out);
    out
}

impl TruncatedSeries2 {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries2 { order, coeffs: vec![Vec::new(); order + 1] }
    }

    /// Builds a series from `coeffs[n][j]`, truncating beyond `z^order`.
    pub fn from_coeffs(order: usize, coeffs: Vec<Vec<BigRational>>) -> Self {
        let mut s = Self::zero(order);
        for (n, mut c) in coeffs.into_iter().enumerate().take(order + 1) {
            trim(&mut c);
            s.coeffs[n] = c;
        }
        s
    }

    /// The monomial `x^j z^n`.
    pub fn monomial(order: usize, n: usize, j: usize) -> Self {
        let mut s = Self::zero(order);
        if n <= order {
            let mut c = vec![BigRational::zero(); j + 1];
            c[j] = BigRational::from_integer(BigInt::from(1));
            s.coeffs[n] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^j z^n`.
    pub fn coeff(&self, n: usize, j: usize) -> BigRational {
        self.coeffs.get(n).and_then(|c| c.get(j)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The `x`-polynomial multiplying `z^n`.
    pub fn z_coeff(&self, n: usize) -> &[BigRational] {
        self.coeffs.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `exp` of a series without constant term, via
    /// `n e_n = sum_{i=1}^n i h_i e_{n-i}`.
    ///
    /// # Panics
    /// If the `z^0` coefficient is nonzero.
    pub fn exp(&self) -> Self {
        assert!(self.coeffs[0].is_empty(), "exp needs a series without constant term");
        let mut e: Vec<Vec<BigRational>> = Vec::with_capacity(self.order + 1);
        e.push(vec![BigRational::from_integer(BigInt::from(1))]);
        for n in 1..=self.order {
            let mut acc = Vec::new();
            for i in 1..=n {
                let term = poly_mul(&self.coeffs[i], &e[n - i]);
                acc = poly_add(&acc, &poly_scale(&term, &BigRational::from_integer(BigInt::from(i))));
            }
            e.push(poly_scale(&acc, &BigRational::new(BigInt::from(1), BigInt::from(n))));
        }
        TruncatedSeries2 { order: self.order, coeffs: e }
    }

    /// Multiplies by `x`.
    pub fn times_x(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                if c.is_empty() {
                    Vec::new()
                } else {
                    std::iter::once(BigRational::zero()).chain(c.iter().cloned()).collect()
                }
            })
            .collect();
        TruncatedSeries2 { order: self.order, coeffs }
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> BigRational {
        self.coeffs.iter().flatten().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero)
    }
}

impl Add for &TruncatedSeries2 {
    type Output = TruncatedSeries2;

    fn add(self, rhs: &TruncatedSeries2) -> TruncatedSeries2 {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|n| poly_add(&self.coeffs[n], &rhs.coeffs[n])).collect();
        TruncatedSeries2 { order, coeffs }
    }
}

impl Sub for &TruncatedSeries2 {
    type Output = TruncatedSeries2;

    fn sub(self, rhs: &TruncatedSeries2) -> TruncatedSeries2 {
        let minus_one = BigRational::from_integer(BigInt::from(-1));
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|n| poly_add(&self.coeffs[n], &poly_scale(&rhs.coeffs[n], &minus_one))).collect();
        TruncatedSeries2 { order, coeffs }
    }
}

impl Mul for &TruncatedSeries2 {
    type Output = TruncatedSeries2;

    // Cauchy product: the index subtraction is intended.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &TruncatedSeries2) -> TruncatedSeries2 {
        let order = self.order.min(rhs.order);
        let mut out = TruncatedSeries2::zero(order);
        for n in 0..=order {
            let mut acc = Vec::new();
            for i in 0..=n {
                acc = poly_add(&acc, &poly_mul(&self.coeffs[i], &rhs.coeffs[n - i]));
            }
            out.coeffs[n] = acc;
        }
        out
    }
}

/// `H(x,z) = sum_{n>=1} P_{n-1}(x) z^n / n!`, truncated after `z^order`.
pub fn tree_series(order: usize) -> TruncatedSeries2 {
    let mut coeffs = vec![Vec::new()];
    let mut factorial = BigInt::from(1);
    for (i, p) in TreePolys::new().take(order).enumerate() {
        let n = i + 1;
        factorial *= BigInt::from(n);
        coeffs.push(p.coeffs().iter().map(|c| BigRational::new(c.clone(), factorial.clone())).collect());
    }
    TruncatedSeries2::from_coeffs(order, coeffs)
}

/// Largest coefficient magnitude of `H - z - x (e^H - 1 - H)` through `z^order`.
pub fn functional_equation_residual(order: usize) -> BigRational {
    let h = tree_series(order);
    let z = TruncatedSeries2::monomial(order, 1, 0);
    let one = TruncatedSeries2::monomial(order, 0, 0);
    let inner = &(&h.exp() - &one) - &h;
    let rhs = &z + &inner.times_x();
    (&h - &rhs).max_abs()
}
