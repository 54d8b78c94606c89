use super::partitions::SetPartition;
use crate::{Error, Result};

/// Sends a partition of `{1..n}` with at least one singleton to a
/// singleton-free partition of `{1..n+1}`: all singleton elements and `n+1`
/// form one new block.
pub fn becker_map(p: &SetPartition) -> Result<SetPartition> {
    let mut merged: Vec<u32> = p.singletons().collect();
    if merged.is_empty() {
        return Err(Error::domain(format!("{p} has no singleton block")));
    }
    merged.push(p.n + 1);
    let mut blocks: Vec<Vec<u32>> = p.blocks.iter().filter(|b| b.len() > 1).cloned().collect();
    blocks.push(merged);
    SetPartition::new(p.n + 1, blocks)
}

/// Inverse of [`becker_map`]: removes `n+1` and splits the rest of its block
/// into singletons.
pub fn becker_inverse(q: &SetPartition) -> Result<SetPartition> {
    if q.n < 2 {
        return Err(Error::domain("becker_inverse needs a ground set of size at least 2"));
    }
    if q.has_singleton() {
        return Err(Error::domain(format!("{q} has a singleton block")));
    }
    let top = q.n;
    let mut blocks = Vec::with_capacity(q.blocks.len() + 1);
    for b in &q.blocks {
        if b.contains(&top) {
            blocks.extend(b.iter().filter(|&&x| x != top).map(|&x| vec![x]));
        } else {
            blocks.push(b.clone());
        }
    }
    SetPartition::new(top - 1, blocks)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::oracle::Partitions;

    fn part(n: u32, blocks: &[&[u32]]) -> SetPartition {
        SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(becker_map(&part(3, &[&[1], &[2, 3]])).unwrap(), part(4, &[&[1, 4], &[2, 3]]));
        assert_eq!(becker_map(&part(3, &[&[1], &[2], &[3]])).unwrap(), part(4, &[&[1, 2, 3, 4]]));
        assert!(becker_map(&part(4, &[&[1, 2], &[3, 4]])).is_err());
        assert!(becker_inverse(&part(3, &[&[1, 2], &[3]])).is_err());
    }

    #[test]
    fn bijection_onto_singleton_free_partitions() {
        for n in 1..=8 {
            let mut images = HashSet::new();
            for p in Partitions::new(n).filter(SetPartition::has_singleton) {
                let q = becker_map(&p).unwrap();
                assert!(!q.has_singleton());
                assert_eq!(becker_inverse(&q).unwrap(), p);
                assert!(images.insert(q), "not injective at n = {n}");
            }
            let targets: HashSet<_> = Partitions::new(n + 1).filter(|q| !q.has_singleton()).collect();
            assert_eq!(images, targets, "not onto at n = {n}");
        }
    }
}
