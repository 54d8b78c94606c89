use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The three recurrence-defined arrays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriangleFamily {
    /// Stirling numbers of the second kind, `S(n,k)`.
    StirlingS,
    /// Partitions into classes of size at least two, `S*(n,k)`.
    StirlingStar,
    /// Phylogenetic trees with `n` leaves and `k` internal vertices, `T(n,k)`.
    Ttriangle,
}

impl TriangleFamily {
    pub const ALL: [TriangleFamily; 3] = [Self::StirlingS, Self::StirlingStar, Self::Ttriangle];

    /// Smallest row index exposed publicly.
    pub fn first_row(self) -> u32 {
        match self {
            Self::StirlingS | Self::StirlingStar => 1,
            Self::Ttriangle => 2,
        }
    }

    /// Inclusive `(k_min, k_max)` of the nonzero entries of row `n`.
    /// The range is empty (`k_max < k_min`) when the row has no support.
    pub fn support(self, n: u32) -> (u32, u32) {
        match self {
            Self::StirlingS => (1, n),
            Self::StirlingStar => (1, n / 2),
            Self::Ttriangle => (1, n.saturating_sub(1)),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Self::StirlingS => "s",
            Self::StirlingStar => "sstar",
            Self::Ttriangle => "t",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// Streams rows `first_row(), first_row()+1, ...` keeping only the
    /// rows the recurrence needs.
    pub fn rows(self) -> RowStream {
        RowStream::new(self)
    }

    /// Row `n` computed from scratch without touching any cache.
    pub fn row_at(self, n: u32) -> Result<Row> {
        if n < self.first_row() {
            return Err(Error::domain(format!(
                "{} row index must be at least {}, got {n}",
                self.tag(),
                self.first_row()
            )));
        }
        Ok(self.rows().nth((n - self.first_row()) as usize).expect("row stream is infinite"))
    }
}

impl fmt::Display for TriangleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One row of a triangle: `values[i] = A(n, k_min + i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub n: u32,
    pub k_min: u32,
    pub values: Vec<BigUint>,
}

impl Row {
    /// Largest `k` with a stored value; `k_min - 1` for an empty row.
    pub fn k_max(&self) -> u32 {
        self.k_min + self.values.len() as u32 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `A(n,k)`, zero outside the stored range.
    pub fn get(&self, k: i64) -> BigUint {
        self.get_ref(k).cloned().unwrap_or_default()
    }

    pub fn get_ref(&self, k: i64) -> Option<&BigUint> {
        let idx = k - i64::from(self.k_min);
        if idx < 0 {
            return None;
        }
        self.values.get(idx as usize)
    }

    pub fn sum(&self) -> BigUint {
        self.values.iter().sum()
    }

    /// `(k, value)` pairs over the stored range.
    pub fn entries(&self) -> impl Iterator<Item = (u32, &BigUint)> + '_ {
        self.values.iter().enumerate().map(move |(i, v)| (self.k_min + i as u32, v))
    }
}

fn scaled(v: Option<&BigUint>, factor: u64) -> BigUint {
    match v {
        Some(v) if factor != 0 => v * factor,
        _ => BigUint::zero(),
    }
}

/// Computes row `n` of `family` from rows `n-1` and `n-2` (either may be
/// absent when the recurrence does not reach them).
pub(crate) fn next_row(family: TriangleFamily, n: u32, prev: Option<&Row>, prev2: Option<&Row>) -> Row {
    use TriangleFamily::*;
    match (family, n) {
        (StirlingS, 1) | (Ttriangle, 2) => Row { n, k_min: 1, values: vec![BigUint::one()] },
        // Internal base row S*(0,0) = 1; never exposed.
        (StirlingStar, 0) => Row { n, k_min: 0, values: vec![BigUint::one()] },
        (StirlingStar, 1) => Row { n, k_min: 1, values: Vec::new() },
        (StirlingS, _) => {
            let prev = prev.expect("previous S row");
            let values = (1..=n)
                .map(|k| {
                    let k = i64::from(k);
                    scaled(prev.get_ref(k - 1), 1) + scaled(prev.get_ref(k), k as u64)
                })
                .collect();
            Row { n, k_min: 1, values }
        }
        (StirlingStar, _) => {
            let prev = prev.expect("previous S* row");
            let prev2 = prev2.expect("second previous S* row");
            let values = (1..=n / 2)
                .map(|k| {
                    let k = i64::from(k);
                    scaled(prev2.get_ref(k - 1), u64::from(n - 1)) + scaled(prev.get_ref(k), k as u64)
                })
                .collect();
            Row { n, k_min: 1, values }
        }
        (Ttriangle, _) => {
            let prev = prev.expect("previous T row");
            let mut values = Vec::with_capacity(n as usize - 1);
            values.push(BigUint::one());
            for k in 2..n {
                let k = i64::from(k);
                values
                    .push(scaled(prev.get_ref(k - 1), u64::from(n) + k as u64 - 2) + scaled(prev.get_ref(k), k as u64));
            }
            Row { n, k_min: 1, values }
        }
    }
}

/// Infinite iterator over the public rows of a family.
#[derive(Debug, Clone)]
pub struct RowStream {
    family: TriangleFamily,
    next_n: u32,
    prev: Option<Row>,
    prev2: Option<Row>,
}

impl RowStream {
    fn new(family: TriangleFamily) -> Self {
        let mut stream = RowStream { family, next_n: family.first_row(), prev: None, prev2: None };
        if family == TriangleFamily::StirlingStar {
            stream.prev = Some(next_row(family, 0, None, None));
        }
        stream
    }

    /// Continues a stream after `last` (and `before_last`, its predecessor).
    pub(crate) fn resume(family: TriangleFamily, before_last: Option<Row>, last: Row) -> Self {
        let before_last = match (family, before_last) {
            (TriangleFamily::StirlingStar, None) if last.n == 1 => Some(next_row(family, 0, None, None)),
            (_, b) => b,
        };
        RowStream { family, next_n: last.n + 1, prev: Some(last), prev2: before_last }
    }
}

impl Iterator for RowStream {
    type Item = Row;

    fn next(&mut self) -> Option<Row> {
        let row = next_row(self.family, self.next_n, self.prev.as_ref(), self.prev2.as_ref());
        self.next_n += 1;
        self.prev2 = self.prev.replace(row.clone());
        Some(row)
    }
}

/// Lazily extended triangle with every materialized row kept in memory.
///
/// Rows are immutable once pushed; readers holding `&Row` never observe a
/// partially built row.
#[derive(Debug, Clone)]
pub struct CountTriangle {
    family: TriangleFamily,
    rows: Vec<Row>,
    stream: RowStream,
}

impl CountTriangle {
    pub fn new(family: TriangleFamily) -> Self {
        CountTriangle { family, rows: Vec::new(), stream: family.rows() }
    }

    /// Rebuilds a triangle from previously computed rows, which must be the
    /// contiguous prefix starting at the family's first row.
    pub fn from_rows(family: TriangleFamily, rows: Vec<Row>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            let expected_n = family.first_row() + i as u32;
            if row.n != expected_n {
                return Err(Error::Cache {
                    line: i + 1,
                    message: format!("expected row {expected_n}, found row {}", row.n),
                });
            }
            let (k_min, k_max) = family.support(row.n);
            let expected_len = (k_max + 1).saturating_sub(k_min) as usize;
            if row.k_min != k_min || row.values.len() != expected_len {
                return Err(Error::Cache {
                    line: i + 1,
                    message: format!("row {} does not match the {family} support", row.n),
                });
            }
        }
        let stream = match rows.len() {
            0 => family.rows(),
            len => RowStream::resume(family, len.checked_sub(2).map(|i| rows[i].clone()), rows[len - 1].clone()),
        };
        Ok(CountTriangle { family, rows, stream })
    }

    pub fn family(&self) -> TriangleFamily {
        self.family
    }

    /// Highest materialized row index, if any.
    pub fn max_row(&self) -> Option<u32> {
        self.rows.last().map(|r| r.n)
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn extend_to(&mut self, n: u32) {
        while self.max_row().is_none_or(|m| m < n) {
            let row = self.stream.next().expect("row stream is infinite");
            self.rows.push(row);
        }
    }

    pub fn row(&mut self, n: u32) -> Result<&Row> {
        let first = self.family.first_row();
        if n < first {
            return Err(Error::domain(format!("{} row index must be at least {first}, got {n}", self.family)));
        }
        self.extend_to(n);
        Ok(&self.rows[(n - first) as usize])
    }

    pub fn get(&mut self, n: u32, k: i64) -> Result<BigUint> {
        Ok(self.row(n)?.get(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(row: &Row) -> Vec<u64> {
        row.values.iter().map(|v| v.try_into().unwrap()).collect()
    }

    #[test]
    fn first_rows_of_each_family() {
        let s: Vec<_> = TriangleFamily::StirlingS.rows().take(5).map(|r| small(&r)).collect();
        assert_eq!(s[3], vec![1, 7, 6, 1]);
        assert_eq!(s[4], vec![1, 15, 25, 10, 1]);

        let star: Vec<_> = TriangleFamily::StirlingStar.rows().take(6).collect();
        assert!(star[0].is_empty());
        assert_eq!(small(&star[3]), vec![1, 3]);
        assert_eq!(small(&star[4]), vec![1, 10]);
        assert_eq!(small(&star[5]), vec![1, 25, 15]);

        let t: Vec<_> = TriangleFamily::Ttriangle.rows().take(3).map(|r| small(&r)).collect();
        assert_eq!(t, vec![vec![1], vec![1, 3], vec![1, 10, 15]]);
    }

    #[test]
    fn row_getter_is_zero_outside_support() {
        let row = TriangleFamily::StirlingS.row_at(3).unwrap();
        assert_eq!(row.get(0), BigUint::zero());
        assert_eq!(row.get(4), BigUint::zero());
        assert_eq!(row.get(-7), BigUint::zero());
        assert_eq!(row.get(2), BigUint::from(3u32));
    }

    #[test]
    fn triangle_resumes_from_loaded_rows() {
        for family in TriangleFamily::ALL {
            let mut full = CountTriangle::new(family);
            full.extend_to(12);
            for keep in 0..5 {
                let prefix = full.rows()[..keep].to_vec();
                let mut resumed = CountTriangle::from_rows(family, prefix).unwrap();
                resumed.extend_to(12);
                assert_eq!(resumed.rows(), full.rows(), "{family} keep={keep}");
            }
        }
    }

    #[test]
    fn from_rows_rejects_gaps() {
        let rows: Vec<_> = TriangleFamily::StirlingS.rows().take(4).collect();
        let gapped = vec![rows[0].clone(), rows[2].clone()];
        assert!(CountTriangle::from_rows(TriangleFamily::StirlingS, gapped).is_err());
    }

    #[test]
    fn row_below_first_is_domain_error() {
        assert!(TriangleFamily::Ttriangle.row_at(1).is_err());
        assert!(CountTriangle::new(TriangleFamily::StirlingS).row(0).is_err());
    }
}
