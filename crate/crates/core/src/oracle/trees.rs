use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{check_cap, TREE_VERTEX_CAP};
use crate::{Error, Result};

/// A non-root vertex and everything below it. Leaves carry labels; internal
/// vertices are unlabeled.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subtree {
    Leaf(u32),
    Node(Vec<Subtree>),
}

impl Subtree {
    pub fn vertex_count(&self) -> usize {
        match self {
            Subtree::Leaf(_) => 1,
            Subtree::Node(c) => 1 + c.iter().map(Subtree::vertex_count).sum::<usize>(),
        }
    }

    fn min_label(&self) -> u32 {
        match self {
            Subtree::Leaf(l) => *l,
            Subtree::Node(c) => c.iter().map(Subtree::min_label).min().unwrap_or(u32::MAX),
        }
    }

    fn collect_labels(&self, out: &mut Vec<u32>) {
        match self {
            Subtree::Leaf(l) => out.push(*l),
            Subtree::Node(c) => c.iter().for_each(|s| s.collect_labels(out)),
        }
    }

    fn canonicalize(&mut self) {
        if let Subtree::Node(c) = self {
            c.iter_mut().for_each(Subtree::canonicalize);
            c.sort_by_key(Subtree::min_label);
        }
    }

    fn internal_ok(&self, min_children: usize) -> bool {
        match self {
            Subtree::Leaf(_) => true,
            Subtree::Node(c) => c.len() >= min_children && c.iter().all(|s| s.internal_ok(min_children)),
        }
    }
}

impl fmt::Display for Subtree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subtree::Leaf(l) => write!(f, "{l}"),
            Subtree::Node(c) => {
                f.write_str("(")?;
                for (i, s) in c.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl Serialize for Subtree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Subtree::Leaf(l) => s.serialize_u32(*l),
            Subtree::Node(c) => c.serialize(s),
        }
    }
}

/// A rooted tree whose root is neither a vertex nor a leaf: only the
/// subtrees hanging from it are counted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTree {
    pub children: Vec<Subtree>,
}

impl RootedTree {
    /// Sorts children by their smallest leaf label at every level. Two trees
    /// are isomorphic (fixing root and labels) iff their canonical forms are
    /// equal.
    pub fn canonical(mut self) -> Self {
        self.children.iter_mut().for_each(Subtree::canonicalize);
        self.children.sort_by_key(Subtree::min_label);
        self
    }

    /// Non-root vertices.
    pub fn vertex_count(&self) -> usize {
        self.children.iter().map(Subtree::vertex_count).sum()
    }

    /// Leaf labels in depth-first order.
    pub fn labels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.children.iter().for_each(|s| s.collect_labels(&mut out));
        out
    }

    pub fn leaf_count(&self) -> usize {
        self.labels().len()
    }

    /// Leaves labeled `1..=k` once each and a root with a child.
    pub fn is_semilabeled(&self) -> bool {
        let mut labels = self.labels();
        labels.sort_unstable();
        !self.children.is_empty() && labels.iter().enumerate().all(|(i, &l)| l == i as u32 + 1)
    }

    /// Root of degree at least 2 and no other vertex of degree 2.
    pub fn is_phylogenetic(&self) -> bool {
        self.is_semilabeled() && self.children.len() >= 2 && self.children.iter().all(|s| s.internal_ok(2))
    }

    pub fn canonical_string(&self) -> String {
        let c = self.clone().canonical();
        let parts: Vec<String> = c.children.iter().map(Subtree::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

impl Serialize for RootedTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.children.serialize(s)
    }
}

/// Memoized generation of canonical subtrees and forests over label sets
/// given as bitmasks (bit `i` is label `i+1`).
struct Generator {
    min_children: usize,
    subtrees: HashMap<(u32, usize), Vec<Subtree>>,
}

impl Generator {
    fn new(min_children: usize) -> Self {
        Generator { min_children, subtrees: HashMap::new() }
    }

    fn subtrees(&mut self, labels: u32, vertices: usize) -> Vec<Subtree> {
        if let Some(v) = self.subtrees.get(&(labels, vertices)) {
            return v.clone();
        }
        let out = if vertices == 1 {
            if labels.count_ones() == 1 {
                vec![Subtree::Leaf(labels.trailing_zeros() + 1)]
            } else {
                Vec::new()
            }
        } else {
            self.forests(labels, vertices - 1, self.min_children).into_iter().map(Subtree::Node).collect()
        };
        self.subtrees.insert((labels, vertices), out.clone());
        out
    }

    /// Sequences of subtrees, ordered by minimum label, whose label sets
    /// partition `labels`, with `vertices` vertices in total and at least
    /// `need` members.
    fn forests(&mut self, labels: u32, vertices: usize, need: usize) -> Vec<Vec<Subtree>> {
        if labels == 0 {
            return if vertices == 0 && need == 0 { vec![Vec::new()] } else { Vec::new() };
        }
        let low = labels & labels.wrapping_neg();
        let rest = labels & !low;
        let mut out = Vec::new();
        // Every subset of `rest`, joined with the lowest label.
        let mut sub = rest;
        loop {
            let block = sub | low;
            let remaining = labels & !block;
            let min_here = block.count_ones() as usize;
            let min_rest = remaining.count_ones() as usize;
            for v in min_here..=vertices.saturating_sub(min_rest) {
                let heads = self.subtrees(block, v);
                if heads.is_empty() {
                    continue;
                }
                let tails = self.forests(remaining, vertices - v, need.saturating_sub(1));
                for h in &heads {
                    for t in &tails {
                        let mut f = Vec::with_capacity(t.len() + 1);
                        f.push(h.clone());
                        f.extend(t.iter().cloned());
                        out.push(f);
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        out
    }
}

fn full_mask(k: u32) -> Result<u32> {
    if k == 0 || k > 31 {
        return Err(Error::domain(format!("leaf count must be in 1..=31, got {k}")));
    }
    Ok((1u32 << k) - 1)
}

fn enumerate(n: u32, k: u32, min_children: usize, lift_caps: bool) -> Result<Vec<RootedTree>> {
    check_cap("non-root tree vertices", n as usize, TREE_VERTEX_CAP, lift_caps)?;
    if n < 1 {
        return Err(Error::domain("trees need at least one non-root vertex"));
    }
    if k > n {
        return Ok(Vec::new());
    }
    let mask = full_mask(k)?;
    let mut generator = Generator::new(min_children);
    Ok(generator.forests(mask, n as usize, min_children).into_iter().map(|children| RootedTree { children }).collect())
}

/// Rooted semilabeled trees with `n` non-root vertices and `k` leaves,
/// one per isomorphism class. Counted by `F(n,k)`.
pub fn enumerate_semilabeled(n: u32, k: u32, lift_caps: bool) -> Result<Vec<RootedTree>> {
    enumerate(n, k, 1, lift_caps)
}

/// Phylogenetic trees with `n` non-root vertices and `k` leaves. Counted by
/// `F*(n,k)`.
pub fn enumerate_phylo(n: u32, k: u32, lift_caps: bool) -> Result<Vec<RootedTree>> {
    enumerate(n, k, 2, lift_caps)
}

/// Phylogenetic trees with `leaves` labeled leaves and `internal` internal
/// vertices, the root included. Counted by `T(leaves, internal)`.
pub fn enumerate_phylo_by_leaves(leaves: u32, internal: u32, lift_caps: bool) -> Result<Vec<RootedTree>> {
    if leaves < 2 || internal < 1 {
        return Err(Error::domain(format!("need leaves >= 2 and internal >= 1, got ({leaves}, {internal})")));
    }
    enumerate(leaves + internal - 1, leaves, 2, lift_caps)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn strings(trees: &[RootedTree]) -> Vec<String> {
        trees.iter().map(RootedTree::canonical_string).collect()
    }

    #[test]
    fn smallest_trees() {
        assert_eq!(strings(&enumerate_semilabeled(1, 1, false).unwrap()), ["[1]"]);
        assert_eq!(strings(&enumerate_semilabeled(2, 2, false).unwrap()), ["[1,2]"]);
        assert_eq!(strings(&enumerate_semilabeled(2, 1, false).unwrap()), ["[(1)]"]);
        let mut three = strings(&enumerate_semilabeled(3, 2, false).unwrap());
        three.sort();
        assert_eq!(three, ["[(1),2]", "[(1,2)]", "[1,(2)]"]);
        assert_eq!(strings(&enumerate_phylo_by_leaves(2, 1, false).unwrap()), ["[1,2]"]);
    }

    #[test]
    fn four_leaves_give_26_phylogenetic_trees() {
        let total: usize = (1..4).map(|m| enumerate_phylo_by_leaves(4, m, false).unwrap().len()).sum();
        assert_eq!(total, 26);
    }

    #[test]
    fn classes_are_distinct_and_canonical() {
        for n in 1..=7 {
            for k in 1..=n {
                let trees = enumerate_semilabeled(n, k, false).unwrap();
                let set: HashSet<_> = strings(&trees).into_iter().collect();
                assert_eq!(set.len(), trees.len(), "duplicates at ({n},{k})");
                for t in &trees {
                    assert_eq!(t.vertex_count(), n as usize);
                    assert_eq!(t.leaf_count(), k as usize);
                    assert!(t.is_semilabeled());
                    assert_eq!(&t.clone().canonical(), t);
                }
            }
        }
    }

    #[test]
    fn phylo_trees_are_the_valid_semilabeled_trees() {
        for n in 1..=7 {
            for k in 1..=n {
                let phylo: HashSet<_> = strings(&enumerate_phylo(n, k, false).unwrap()).into_iter().collect();
                let filtered: HashSet<_> = enumerate_semilabeled(n, k, false)
                    .unwrap()
                    .into_iter()
                    .filter(RootedTree::is_phylogenetic)
                    .map(|t| t.canonical_string())
                    .collect();
                assert_eq!(phylo, filtered, "({n},{k})");
            }
        }
    }

    #[test]
    fn validator_rejects_degree_two() {
        let unary = RootedTree { children: vec![Subtree::Node(vec![Subtree::Leaf(1)]), Subtree::Leaf(2)] };
        assert!(unary.is_semilabeled() && !unary.is_phylogenetic());
        let lone = RootedTree { children: vec![Subtree::Node(vec![Subtree::Leaf(1), Subtree::Leaf(2)])] };
        assert!(!lone.is_phylogenetic());
        let gap = RootedTree { children: vec![Subtree::Leaf(1), Subtree::Leaf(3)] };
        assert!(!gap.is_semilabeled());
    }

    #[test]
    fn json_nesting() {
        let t =
            RootedTree { children: vec![Subtree::Node(vec![Subtree::Leaf(1), Subtree::Leaf(3)]), Subtree::Leaf(2)] };
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,3],2]");
    }

    #[test]
    fn caps_and_domains() {
        assert!(matches!(enumerate_semilabeled(10, 3, false), Err(Error::SizeCap { .. })));
        assert!(enumerate_semilabeled(0, 0, false).is_err());
        assert!(enumerate_semilabeled(3, 4, false).unwrap().is_empty());
        assert!(enumerate_phylo_by_leaves(1, 1, false).is_err());
    }
}
