use std::fmt;

use serde::Serialize;

use super::{check_cap, PARTITION_CAP};
use crate::{Error, Result};

/// A partition of `{1..n}`: blocks sorted internally and by their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SetPartition {
    pub n: u32,
    pub blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// Validates and canonicalizes.
    pub fn new(n: u32, mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; n as usize + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::domain("empty block"));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x < 1 || x > n || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::domain(format!("element {x} is out of range or repeated")));
                }
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::domain("blocks do not cover the ground set"));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// From a restricted growth string: element `i+1` goes to block `rgs[i]`.
    fn from_rgs(rgs: &[u32]) -> Self {
        let k = rgs.iter().max().map_or(0, |m| m + 1) as usize;
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b as usize].push(i as u32 + 1);
        }
        SetPartition { n: rgs.len() as u32, blocks }
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn singletons(&self) -> impl Iterator<Item = u32> + '_ {
        self.blocks.iter().filter(|b| b.len() == 1).map(|b| b[0])
    }

    pub fn has_singleton(&self) -> bool {
        self.singletons().next().is_some()
    }

    pub fn min_block_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).min().unwrap_or(0)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.blocks.iter().map(|b| b.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{{{}}}", parts.join(" | "))
    }
}

/// All partitions of `{1..n}` in lexicographic order of their restricted
/// growth strings.
#[derive(Debug, Clone)]
pub struct Partitions {
    rgs: Vec<u32>,
    /// `max(rgs[..=i])` for each prefix.
    prefix_max: Vec<u32>,
    done: bool,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        let n = n as usize;
        Partitions { rgs: vec![0; n], prefix_max: vec![0; n], done: false }
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = SetPartition::from_rgs(&self.rgs);
        // Increment the rightmost position that can grow, reset the tail.
        let n = self.rgs.len();
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                break;
            }
        }
        Some(out)
    }
}

/// Partitions of `{1..n}` counted by number of blocks: entry `k-1` counts
/// those with `k` blocks, all of size at least `min_block`.
pub fn enumerate_partitions(n: u32, min_block: usize, lift_caps: bool) -> Result<Vec<u64>> {
    check_cap("partition ground set", n as usize, PARTITION_CAP, lift_caps)?;
    if n < 1 {
        return Err(Error::domain("enumerate_partitions requires n >= 1"));
    }
    let mut counts = vec![0u64; n as usize];
    for p in Partitions::new(n) {
        if p.min_block_size() >= min_block {
            counts[p.block_count() - 1] += 1;
        }
    }
    Ok(counts)
}
