use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial with big-integer coefficients, constant term first.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `sum values[i] x^(offset + i)`.
    pub fn from_unsigned(offset: usize, values: &[BigUint]) -> Self {
        let mut coeffs = vec![BigInt::zero(); offset];
        coeffs.extend(values.iter().map(|v| BigInt::from_biguint(Sign::Plus, v.clone())));
        Self::new(coeffs)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the last nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Multiplicity of the root at zero (number of leading zero coefficients).
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^k`; the low `k` coefficients must be zero.
    pub fn deflate_zero(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// `p(num/den) * den^deg` as an integer; its sign is the sign of
    /// `p(num/den)` because `den > 0`. Power-of-two denominators take a
    /// shift-only path.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        debug_assert!(den.is_positive());
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = self.coeffs[d].clone();
        if let Some(shift) = power_of_two_exponent(den) {
            for (j, c) in self.coeffs[..d].iter().rev().enumerate() {
                acc = acc * num + (c << (shift * (j as u64 + 1)));
            }
        } else {
            let mut den_pow = BigInt::one();
            for c in self.coeffs[..d].iter().rev() {
                den_pow *= den;
                acc = acc * num + c * &den_pow;
            }
        }
        acc
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        sign_of(&self.eval_homogeneous(x.numer(), x.denom()))
    }

    /// Number of sign changes in the coefficient sequence.
    pub fn sign_variations(&self) -> usize {
        let signs: Vec<i32> = self.coeffs.iter().map(sign_of).filter(|s| *s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// `Some(e)` when `x == 2^e`.
pub(crate) fn power_of_two_exponent(x: &BigInt) -> Option<u64> {
    if !x.is_positive() {
        return None;
    }
    let tz = x.trailing_zeros()?;
    (x.bits() == tz + 1).then_some(tz)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                _ if !unit => write!(f, "{magnitude}x")?,
                _ => f.write_str("x")?,
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

/// Generating polynomial `S_n(x) = sum_k S*(n,k) x^k`, built from
/// `S_n = (n-1) x S_{n-2} + x S'_{n-1}` with `S_1 = 0`, `S_2 = x`.
pub fn s_star_poly(n: u32) -> crate::Result<IntPolynomial> {
    if n < 1 {
        return Err(crate::Error::domain("s_star_poly requires n >= 1"));
    }
    Ok(SStarPolys::new().nth(n as usize - 1).expect("infinite"))
}

/// Iterator over `S_1, S_2, S_3, ...`.
#[derive(Debug, Clone, Default)]
pub struct SStarPolys {
    n: u32,
    prev: IntPolynomial,
    prev2: IntPolynomial,
}

impl SStarPolys {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for SStarPolys {
    type Item = IntPolynomial;

    fn next(&mut self) -> Option<IntPolynomial> {
        self.n += 1;
        let next = match self.n {
            1 => IntPolynomial::zero(),
            2 => IntPolynomial::x(),
            n => {
                let a = self.prev2.shift(1).scale(&BigInt::from(n - 1));
                let b = self.prev.derivative().shift(1);
                &a + &b
            }
        };
        self.prev2 = std::mem::replace(&mut self.prev, next.clone());
        Some(next)
    }
}

/// Tree polynomial `P_n(x) = sum_k T(n+1,k) x^k`, built from
/// `P_n = n x P_{n-1} + (x + x^2) P'_{n-1}` with `P_0 = 1`, `P_1 = x`.
pub fn tree_poly(n: u32) -> IntPolynomial {
    TreePolys::new().nth(n as usize).expect("infinite")
}

/// Iterator over `P_0, P_1, P_2, ...`.
#[derive(Debug, Clone, Default)]
pub struct TreePolys {
    next_n: u32,
    prev: IntPolynomial,
}

impl TreePolys {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for TreePolys {
    type Item = IntPolynomial;

    fn next(&mut self) -> Option<IntPolynomial> {
        let n = self.next_n;
        self.next_n += 1;
        let next = match n {
            0 => IntPolynomial::one(),
            1 => IntPolynomial::x(),
            n => {
                let a = self.prev.shift(1).scale(&BigInt::from(n));
                let d = self.prev.derivative();
                let b = &d.shift(1) + &d.shift(2);
                &a + &b
            }
        };
        self.prev = next.clone();
        Some(next)
    }
}
