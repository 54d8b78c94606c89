//! Strict log-concavity, Newton's inequalities and unimodality for rows of
//! nonnegative integers.

use num_bigint::BigUint;
use serde::Serialize;

use crate::bigcount::Row;

/// First index where a check failed, with the offending values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConcavityFailure {
    pub k: i64,
    pub detail: String,
}

/// Checks `a_k^2 > a_{k-1} a_{k+1}` for every interior index of the row.
/// Rows of length below three pass vacuously.
pub fn check_slc(row: &Row) -> Result<(), ConcavityFailure> {
    for (i, w) in row.values.windows(3).enumerate() {
        let (a, b, c) = (&w[0], &w[1], &w[2]);
        if b * b <= a * c {
            return Err(ConcavityFailure {
                k: i64::from(row.k_min) + i as i64 + 1,
                detail: format!("a_k^2 = {} <= {}", b * b, a * c),
            });
        }
    }
    Ok(())
}

/// Newton's inequalities for the row `C_1, ..., C_N` of a real-rooted
/// polynomial of degree `N`:
///
/// `C_k^2 (k-1)(N-k) >= C_{k+1} C_{k-1} k (N-k+1)` for `2 <= k <= N-1`.
///
/// `values[i]` is `C_{i+1}`; missing trailing entries are zero.
pub fn check_newton(values: &[BigUint], degree: usize) -> Result<(), ConcavityFailure> {
    let c = |k: usize| values.get(k - 1).cloned().unwrap_or_default();
    for k in 2..degree {
        let lhs = c(k) * c(k) * BigUint::from((k - 1) * (degree - k));
        let rhs = c(k + 1) * c(k - 1) * BigUint::from(k * (degree - k + 1));
        if lhs < rhs {
            return Err(ConcavityFailure { k: k as i64, detail: format!("{lhs} < {rhs}") });
        }
    }
    Ok(())
}

/// Nondecreasing then nonincreasing.
pub fn is_unimodal(values: &[BigUint]) -> bool {
    let mut descending = false;
    for w in values.windows(2) {
        if w[1] < w[0] {
            descending = true;
        } else if descending && w[1] > w[0] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigcount::{CountTriangle, TriangleFamily};

    fn row(k_min: u32, values: &[u64]) -> Row {
        Row { n: 0, k_min, values: values.iter().map(|&v| BigUint::from(v)).collect() }
    }

    #[test]
    fn slc_detects_flat_and_convex_rows() {
        assert!(check_slc(&row(1, &[1, 3, 1])).is_ok());
        assert_eq!(check_slc(&row(1, &[1, 2, 4])).unwrap_err().k, 2);
        assert_eq!(check_slc(&row(3, &[1, 3, 1, 1, 1])).unwrap_err().k, 5);
        assert!(check_slc(&row(1, &[5, 1])).is_ok());
    }

    #[test]
    fn newton_examples() {
        // x (1 + x)^3
        let c: Vec<BigUint> = [1u32, 3, 3, 1].iter().map(|&v| BigUint::from(v)).collect();
        assert!(check_newton(&c, 4).is_ok());
        // x + x^3 has complex roots; Newton fails at k = 2.
        let c: Vec<BigUint> = [1u32, 0, 1].iter().map(|&v| BigUint::from(v)).collect();
        assert_eq!(check_newton(&c, 3).unwrap_err().k, 2);
    }

    #[test]
    fn unimodal() {
        let v = |xs: &[u32]| xs.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
        assert!(is_unimodal(&v(&[1, 3, 3, 2, 1])));
        assert!(is_unimodal(&v(&[])));
        assert!(!is_unimodal(&v(&[1, 3, 2, 4])));
    }

    #[test]
    fn small_triangles_pass() {
        for family in TriangleFamily::ALL {
            let mut tri = CountTriangle::new(family);
            tri.extend_to(60);
            for r in tri.rows() {
                assert!(check_slc(r).is_ok(), "{family} row {}", r.n);
                assert!(is_unimodal(&r.values));
            }
        }
    }
}
