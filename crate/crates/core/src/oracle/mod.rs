//! Brute-force enumeration at small sizes, used as ground truth for the
//! recurrences.
//!
//! Partitions come from restricted growth strings. Trees are generated
//! directly in canonical form: children are ordered by their smallest leaf
//! label, and since sibling subtrees have disjoint label sets, distinct
//! canonical forms are exactly the isomorphism classes.

mod becker;
mod partitions;
mod trees;

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

pub use becker::{becker_inverse, becker_map};
pub use partitions::{enumerate_partitions, Partitions, SetPartition};
pub use trees::{enumerate_phylo, enumerate_phylo_by_leaves, enumerate_semilabeled, RootedTree, Subtree};

use crate::bigcount::{bell_star, phylo_f_star, semilabeled_f, stirling2, stirling2_star, tree_count_t};
use crate::{Error, Result};

/// Largest ground set enumerated without an override.
pub const PARTITION_CAP: usize = 12;
/// Largest number of non-root tree vertices enumerated without an override.
pub const TREE_VERTEX_CAP: usize = 9;

/// `Error::SizeCap` when `value` exceeds `cap` and caps are not lifted.
pub fn check_cap(what: &'static str, value: usize, cap: usize, lift: bool) -> Result<()> {
    if !lift && value > cap {
        return Err(Error::SizeCap { what, value, cap });
    }
    Ok(())
}

/// One brute-force count against the recurrence value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub array: &'static str,
    pub n: u32,
    pub k: u32,
    pub oracle: u64,
    pub recurrence: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub passed: bool,
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn failures(&self) -> impl Iterator<Item = &OracleCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

fn check(array: &'static str, n: u32, k: u32, oracle: u64, recurrence: BigUint) -> OracleCheck {
    OracleCheck { array, n, k, oracle, ok: recurrence == BigUint::from(oracle), recurrence: recurrence.to_string() }
}

/// Compares every entry of `S`, `S*` (ground sets up to `max_set`), `F`,
/// `F*` and `T` (up to `max_vertices` non-root vertices) and the Becker
/// counts with brute force.
pub fn oracle_equivalence(max_set: u32, max_vertices: u32, lift_caps: bool) -> Result<OracleReport> {
    check_cap("partition ground set", max_set as usize, PARTITION_CAP, lift_caps)?;
    check_cap("non-root tree vertices", max_vertices as usize, TREE_VERTEX_CAP, lift_caps)?;
    let mut checks = Vec::new();

    for n in 1..=max_set {
        let mut all = vec![0u64; n as usize];
        let mut star = vec![0u64; n as usize];
        let mut images = HashSet::new();
        for p in Partitions::new(n) {
            all[p.block_count() - 1] += 1;
            if !p.has_singleton() {
                star[p.block_count() - 1] += 1;
            } else {
                images.insert(becker_map(&p)?);
            }
        }
        for k in 1..=n {
            let i = (k - 1) as usize;
            checks.push(check("S", n, k, all[i], stirling2(n, k.into())?));
            checks.push(check("S*", n, k, star[i], stirling2_star(n, k.into())?));
        }
        checks.push(check("becker", n + 1, 0, images.len() as u64, bell_star(n + 1)?));
    }

    for n in 1..=max_vertices {
        for k in 1..=n {
            let semi = enumerate_semilabeled(n, k, lift_caps)?.len() as u64;
            checks.push(check("F", n, k, semi, semilabeled_f(n, k.into())?));
            let phylo = enumerate_phylo(n, k, lift_caps)?.len() as u64;
            checks.push(check("F*", n, k, phylo, phylo_f_star(n, k.into())?));
            // n = leaves + internal - 1 non-root vertices.
            if k >= 2 && k <= n {
                let internal = n + 1 - k;
                checks.push(check("T", k, internal, phylo, tree_count_t(k, internal.into())?));
            }
        }
    }

    let passed = checks.iter().all(|c| c.ok);
    Ok(OracleReport { passed, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_equivalence() {
        let report = oracle_equivalence(7, 6, false).unwrap();
        assert!(report.passed, "{:?}", report.failures().collect::<Vec<_>>());
        assert!(report.checks.iter().any(|c| c.array == "T" && c.n == 4));
    }

    #[test]
    fn caps_are_enforced_up_front() {
        assert!(matches!(oracle_equivalence(13, 3, false), Err(Error::SizeCap { .. })));
        assert!(matches!(oracle_equivalence(3, 10, false), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn a_wrong_recurrence_value_fails() {
        let c = check("S", 4, 2, 7, BigUint::from(8u32));
        assert!(!c.ok);
    }
}
