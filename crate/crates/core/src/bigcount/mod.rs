//! Exact counting arrays and their row sums.
//!
//! | array        | recurrence                                          |
//! |--------------|-----------------------------------------------------|
//! | `S(n,k)`     | `S(n-1,k-1) + k S(n-1,k)`                           |
//! | `S*(n,k)`    | `(n-1) S*(n-2,k-1) + k S*(n-1,k)`                   |
//! | `T(n,k)`     | `(n+k-2) T(n-1,k-1) + k T(n-1,k)`, `T(n,1) = 1`     |
//!
//! `F(n,k) = S(n,n-k+1)` and `F*(n,k) = S*(n,n-k+1)` are index reflections.
//! The free functions share process-wide caches and are safe to call from
//! several threads.

mod cache;
mod sequence;
mod triangle;

use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

pub use cache::{
    first_mismatch, format_record, load_triangle, parse_cache, parse_record, save_triangle, triangle_from_records,
    triangle_records, write_cache, CacheRecord,
};
pub use sequence::{BigSequence, SequenceKind};
pub use triangle::{CountTriangle, Row, RowStream, TriangleFamily};

use crate::{Error, Result};

fn triangle_cache(family: TriangleFamily) -> &'static Mutex<CountTriangle> {
    static CACHES: OnceLock<[Mutex<CountTriangle>; 3]> = OnceLock::new();
    let caches = CACHES.get_or_init(|| TriangleFamily::ALL.map(|f| Mutex::new(CountTriangle::new(f))));
    &caches[TriangleFamily::ALL.iter().position(|f| *f == family).unwrap()]
}

fn sequence_cache(kind: SequenceKind) -> &'static Mutex<BigSequence> {
    static CACHES: OnceLock<[Mutex<BigSequence>; 3]> = OnceLock::new();
    const KINDS: [SequenceKind; 3] = [SequenceKind::Bell, SequenceKind::BellStar, SequenceKind::SchroederT];
    let caches = CACHES.get_or_init(|| KINDS.map(|k| Mutex::new(BigSequence::new(k))));
    &caches[KINDS.iter().position(|k| *k == kind).unwrap()]
}

fn cached_entry(family: TriangleFamily, n: u32, k: i64) -> Result<BigUint> {
    let mut tri = triangle_cache(family).lock().unwrap_or_else(|e| e.into_inner());
    tri.get(n, k)
}

/// Runs `f` against the shared triangle of `family`, extended to row `n`.
pub fn with_triangle<R>(family: TriangleFamily, n: u32, f: impl FnOnce(&CountTriangle) -> R) -> R {
    let mut tri = triangle_cache(family).lock().unwrap_or_else(|e| e.into_inner());
    tri.extend_to(n);
    f(&tri)
}

/// The value `a_n` of a row-sum sequence, from the shared cache.
pub fn sequence_value(kind: SequenceKind, n: u32) -> Result<BigUint> {
    let mut seq = sequence_cache(kind).lock().unwrap_or_else(|e| e.into_inner());
    seq.get(n).cloned()
}

/// The values `a_1..=a_n` of a row-sum sequence.
pub fn sequence_prefix(kind: SequenceKind, n: u32) -> Vec<BigUint> {
    let mut seq = sequence_cache(kind).lock().unwrap_or_else(|e| e.into_inner());
    seq.extend_to(n);
    seq.values()[..n as usize].to_vec()
}

fn require_positive(n: u32, what: &str) -> Result<()> {
    if n < 1 {
        return Err(Error::domain(format!("{what} requires n >= 1")));
    }
    Ok(())
}

/// Stirling number of the second kind `S(n,k)`.
pub fn stirling2(n: u32, k: i64) -> Result<BigUint> {
    require_positive(n, "stirling2")?;
    cached_entry(TriangleFamily::StirlingS, n, k)
}

/// Number of partitions of an `n`-set into `k` classes of size at least 2.
pub fn stirling2_star(n: u32, k: i64) -> Result<BigUint> {
    require_positive(n, "stirling2_star")?;
    cached_entry(TriangleFamily::StirlingStar, n, k)
}

/// `T(n,m)`: phylogenetic trees with `n` labeled leaves and `m` internal
/// vertices, the root included.
pub fn tree_count_t(n: u32, m: i64) -> Result<BigUint> {
    if n < 2 || m < 1 {
        return Err(Error::domain(format!("tree_count_t requires n >= 2 and m >= 1, got ({n}, {m})")));
    }
    cached_entry(TriangleFamily::Ttriangle, n, m)
}

/// `T(n,m)` computed as `S*(n+m-1, m)`.
pub fn tree_count_via_partition(n: u32, m: i64) -> Result<BigUint> {
    if n < 2 || m < 1 {
        return Err(Error::domain(format!("tree_count_via_partition requires n >= 2 and m >= 1, got ({n}, {m})")));
    }
    let total = i64::from(n) + m - 1;
    let total = u32::try_from(total).map_err(|_| Error::domain("row index overflows u32"))?;
    stirling2_star(total, m)
}

/// Rooted semilabeled trees with `k` leaves and `n` non-root vertices.
pub fn semilabeled_f(n: u32, k: i64) -> Result<BigUint> {
    require_positive(n, "semilabeled_f")?;
    stirling2(n, i64::from(n) - k + 1)
}

/// Phylogenetic trees with `k` leaves and `n` non-root vertices.
pub fn phylo_f_star(n: u32, k: i64) -> Result<BigUint> {
    require_positive(n, "phylo_f_star")?;
    stirling2_star(n, i64::from(n) - k + 1)
}

pub fn bell(n: u32) -> Result<BigUint> {
    sequence_value(SequenceKind::Bell, n)
}

pub fn bell_star(n: u32) -> Result<BigUint> {
    sequence_value(SequenceKind::BellStar, n)
}

pub fn schroeder_t(n: u32) -> Result<BigUint> {
    sequence_value(SequenceKind::SchroederT, n)
}

/// `B*_n` as the alternating sum `B_{n-1} - B_{n-2} + ... ± B_1`.
pub fn bell_star_alternating(n: u32) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::domain("bell_star_alternating requires n >= 2"));
    }
    let bells = sequence_prefix(SequenceKind::Bell, n - 1);
    let mut total = BigInt::zero();
    for (i, b) in bells.iter().enumerate() {
        // i is zero-based: B_{i+1} carries sign (-1)^{n-2-i}.
        let b = BigInt::from(b.clone());
        if (n as usize - 2 - i).is_multiple_of(2) {
            total += b;
        } else {
            total -= b;
        }
    }
    total.to_biguint().ok_or_else(|| Error::domain("alternating Bell sum is negative"))
}
