use crate::{Error, Result};

const MAX_ITERATIONS: usize = 200;

/// Principal real branch `W_0(x)` for `x >= -1/e`: the solution `w >= -1`
/// of `w e^w = x`.
///
/// Halley steps inside a bracket that always contains the root; a step that
/// is not finite or leaves the bracket is replaced by bisection.
pub fn lambert_w0(x: f64) -> Result<f64> {
    let branch = -(-1.0f64).exp();
    if !x.is_finite() || x < branch {
        return Err(Error::domain(format!("lambert_w0 needs a finite x >= -1/e, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == branch {
        return Ok(-1.0);
    }
    let f = |w: f64| w * w.exp() - x;

    let (mut lo, mut hi) = if x < 0.0 {
        (-1.0, 0.0)
    } else if x <= std::f64::consts::E {
        (0.0, 1.0)
    } else {
        (0.0, x.ln())
    };
    let mut w = initial_guess(x).clamp(lo, hi);

    for _ in 0..MAX_ITERATIONS {
        let fw = f(w);
        if fw == 0.0 {
            return Ok(w);
        }
        if fw < 0.0 {
            lo = lo.max(w);
        } else {
            hi = hi.min(w);
        }
        let ew = w.exp();
        let d1 = ew * (w + 1.0);
        let step = fw / (d1 - (w + 2.0) * fw / (2.0 * w + 2.0));
        let mut next = w - step;
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        if (next - w).abs() <= 2.0 * f64::EPSILON * w.abs().max(f64::MIN_POSITIVE) {
            return Ok(next);
        }
        w = next;
    }
    Ok(w)
}

fn initial_guess(x: f64) -> f64 {
    if x >= 3.0 {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    } else if x < -0.25 {
        // Expansion at the branch point in p = sqrt(2 (e x + 1)).
        let p = (2.0 * (std::f64::consts::E * x + 1.0)).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else {
        x.ln_1p()
    }
}

/// `r(n)`, the positive solution of `r e^r = n`.
pub fn lambert_r(n: f64) -> Result<f64> {
    if n.is_nan() || n <= 0.0 {
        return Err(Error::domain(format!("lambert_r needs n > 0, got {n}")));
    }
    lambert_w0(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_residual(n: f64) -> f64 {
        let r = lambert_r(n).unwrap();
        (r * r.exp() - n).abs() / n
    }

    #[test]
    fn known_values() {
        assert!((lambert_r(std::f64::consts::E).unwrap() - 1.0).abs() <= 1e-15);
        // Omega constant, independently from the fixed point of x = e^-x.
        let mut omega = 0.5f64;
        for _ in 0..200 {
            omega = (-omega).exp();
        }
        assert!((lambert_r(1.0).unwrap() - omega).abs() < 1e-15);
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        assert_eq!(lambert_w0(-(-1.0f64).exp()).unwrap(), -1.0);
    }

    #[test]
    fn residuals() {
        for n in [1e-300, 1e-6, 0.5, 1.0, 2.0, std::f64::consts::E, 10.0, 1e3, 1e6, 1e9, 1e15] {
            assert!(rel_residual(n) <= 1e-13, "n = {n}: {}", rel_residual(n));
        }
        // Beyond that e^r magnifies the rounding of r; check r + ln r = ln n.
        for n in [1e100, 1e300, f64::MAX] {
            let r = lambert_r(n).unwrap();
            assert!((r + r.ln() - n.ln()).abs() <= 4.0 * f64::EPSILON * n.ln(), "n = {n}");
        }
    }

    #[test]
    fn negative_arguments_on_the_principal_branch() {
        for x in [-0.3678, -0.3, -0.2, -0.1, -1e-10] {
            let w = lambert_w0(x).unwrap();
            assert!((-1.0..0.0).contains(&w));
            assert!((w * w.exp() - x).abs() <= 1e-15, "x = {x}");
        }
    }

    #[test]
    fn domain() {
        assert!(lambert_r(0.0).is_err());
        assert!(lambert_r(-1.0).is_err());
        assert!(lambert_r(f64::NAN).is_err());
        assert!(lambert_w0(-0.5).is_err());
        assert!(lambert_w0(f64::INFINITY).is_err());
    }
}
