use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::triangle::{RowStream, TriangleFamily};
use crate::{Error, Result};

/// Row-sum sequences of the three triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SequenceKind {
    /// Bell numbers `B_n`.
    Bell,
    /// Singleton-free Bell numbers `B*_n`.
    BellStar,
    /// Total phylogenetic trees on `n` leaves, `t_n`.
    SchroederT,
}

impl SequenceKind {
    fn family(self) -> TriangleFamily {
        match self {
            Self::Bell => TriangleFamily::StirlingS,
            Self::BellStar => TriangleFamily::StirlingStar,
            Self::SchroederT => TriangleFamily::Ttriangle,
        }
    }
}

/// A sequence indexed from 1, extended on demand by streaming triangle rows.
/// Only the row sums are retained.
#[derive(Debug, Clone)]
pub struct BigSequence {
    kind: SequenceKind,
    values: Vec<BigUint>,
    stream: RowStream,
}

impl BigSequence {
    pub fn new(kind: SequenceKind) -> Self {
        let mut values = Vec::new();
        if kind == SequenceKind::SchroederT {
            // The single-leaf tree: t_1 = P_0(1) = 1. The tree triangle starts at n = 2.
            values.push(BigUint::one());
        }
        BigSequence { kind, values, stream: kind.family().rows() }
    }

    pub fn compute(kind: SequenceKind, n_max: u32) -> Self {
        let mut seq = Self::new(kind);
        seq.extend_to(n_max);
        seq
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn len(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn extend_to(&mut self, n: u32) {
        while self.len() < n {
            let row = self.stream.next().expect("row stream is infinite");
            self.values.push(row.sum());
        }
    }

    pub fn get(&mut self, n: u32) -> Result<&BigUint> {
        if n < 1 {
            return Err(Error::domain("sequence index must be at least 1"));
        }
        self.extend_to(n);
        Ok(&self.values[n as usize - 1])
    }

    /// Values `a_1, ..., a_len` currently materialized.
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}
