//! Conversions between exact values and floats.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Natural logarithm of a positive big integer, exact up to float rounding
/// even when the value is far outside the `f64` range.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit mantissa");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `num / den` rounded to the nearest `f64`, for nonnegative operands of any
/// size.
pub fn ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    assert!(!den.is_zero(), "zero denominator");
    rational_to_f64(&BigRational::new(
        BigInt::from_biguint(Sign::Plus, num.clone()),
        BigInt::from_biguint(Sign::Plus, den.clone()),
    ))
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Out of range; saturate with the right sign.
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact rendering of a rational as `p/q` (or `p` when integral), base 10.
pub fn rational_string(q: &BigRational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Lossless float rendering with 17 significant digits.
pub fn float_string(x: f64) -> String {
    format!("{x:.16e}")
}

/// `q` in scientific notation with `digits` significant digits, correctly
/// rounded (ties away from zero).
pub fn rational_decimal(q: &BigRational, digits: u32) -> String {
    assert!(digits >= 1, "at least one digit");
    if q.is_zero() {
        return "0".into();
    }
    let sign = if q.is_negative() { "-" } else { "" };
    let (num, den) = (q.numer().abs(), q.denom().clone());
    let ten = BigInt::from(10);
    // Estimate of floor(log10 |q|), corrected below.
    let mut exp10 = ((num.bits() as f64 - den.bits() as f64) * std::f64::consts::LOG10_2).floor() as i64;
    loop {
        let shift = i64::from(digits) - 1 - exp10;
        let (n, d) = if shift >= 0 {
            (&num * ten.pow(shift as u32), den.clone())
        } else {
            (num.clone(), &den * ten.pow((-shift) as u32))
        };
        let (quot, rem) = n.div_rem(&d);
        let m = if rem * 2u32 >= d { quot + 1u32 } else { quot };
        let lower = ten.pow(digits - 1);
        if m < lower {
            exp10 -= 1;
            continue;
        }
        if m >= &lower * &ten {
            exp10 += 1;
            continue;
        }
        let text = m.to_string();
        let (head, tail) = text.split_at(1);
        return if tail.is_empty() { format!("{sign}{head}e{exp10}") } else { format!("{sign}{head}.{tail}e{exp10}") };
    }
}

pub fn to_bigint(x: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, x.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_of_huge_integer() {
        let x = BigUint::from(3u32).pow(2000);
        let expected = 2000.0 * 3f64.ln();
        assert!((ln_biguint(&x) - expected).abs() / expected < 1e-14);
    }

    #[test]
    fn ratio_of_huge_integers() {
        let a = BigUint::from(7u32) * BigUint::from(10u32).pow(900);
        let b = BigUint::from(2u32) * BigUint::from(10u32).pow(900);
        assert_eq!(ratio_to_f64(&a, &b), 3.5);
    }

    #[test]
    fn decimal_rendering() {
        let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(rational_decimal(&q(7, 4), 5), "1.7500e0");
        assert_eq!(rational_decimal(&q(-1, 3), 3), "-3.33e-1");
        assert_eq!(rational_decimal(&q(2, 3), 2), "6.7e-1");
        assert_eq!(rational_decimal(&q(999_999, 1), 3), "1.00e6");
        assert_eq!(rational_decimal(&q(1, 1000), 1), "1e-3");
        assert_eq!(rational_decimal(&q(0, 1), 4), "0");
        let big = BigRational::from_integer(BigInt::from(10).pow(400) * 3);
        assert_eq!(rational_decimal(&big, 2), "3.0e400");
    }

    #[test]
    fn rational_rendering() {
        let q = BigRational::new(BigInt::from(14), BigInt::from(8));
        assert_eq!(rational_string(&q), "7/4");
        let q = BigRational::from_integer(BigInt::from(-3));
        assert_eq!(rational_string(&q), "-3");
    }
}
