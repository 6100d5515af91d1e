//! Set partitions in restricted-growth form.
//!
//! A partition of `{0..n-1}` is stored as its restricted-growth string:
//! `rgs[0] = 0` and each later entry is at most one more than the maximum so
//! far. This makes the representation canonical (block indices appear in
//! order of their smallest member) and gives a natural lexicographic
//! enumeration order.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const MAX_PARTITION_SIZE: usize = 13; // Bell(13) = 27_644_437

/// A set partition of `{0..n-1}` in canonical restricted-growth form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    rgs: Vec<u8>,
}

impl SetPartition {
    /// Validates the restricted-growth property.
    pub fn from_rgs(rgs: &[usize]) -> Result<SetPartition> {
        if rgs.is_empty() {
            return Err(Error::InvalidParameter(
                "partition of the empty set is not supported".into(),
            ));
        }
        let mut max_seen: i64 = -1;
        for (i, &b) in rgs.iter().enumerate() {
            if b as i64 > max_seen + 1 {
                return Err(Error::InvalidParameter(format!(
                    "not a restricted-growth string: entry {b} at position {i}"
                )));
            }
            max_seen = max_seen.max(b as i64);
        }
        Ok(SetPartition {
            rgs: rgs.iter().map(|&b| b as u8).collect(),
        })
    }

    /// Builds the canonical form of an arbitrary block list covering
    /// `{0..n-1}` exactly once.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<SetPartition> {
        let mut assign = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &v in block {
                if v >= n || assign[v] != usize::MAX {
                    return Err(Error::InvalidParameter(
                        "blocks must partition the vertex set".into(),
                    ));
                }
                assign[v] = b;
            }
        }
        if assign.contains(&usize::MAX) {
            return Err(Error::InvalidParameter(
                "blocks must cover every vertex".into(),
            ));
        }
        // Renumber blocks by first occurrence.
        let mut relabel = vec![usize::MAX; blocks.len()];
        let mut next = 0;
        let mut rgs = Vec::with_capacity(n);
        for &b in &assign {
            if relabel[b] == usize::MAX {
                relabel[b] = next;
                next += 1;
            }
            rgs.push(relabel[b]);
        }
        SetPartition::from_rgs(&rgs)
    }

    /// All singletons.
    pub fn discrete(n: usize) -> SetPartition {
        SetPartition {
            rgs: (0..n).map(|v| v as u8).collect(),
        }
    }

    /// One block.
    pub fn indiscrete(n: usize) -> SetPartition {
        SetPartition { rgs: vec![0; n] }
    }

    pub fn size(&self) -> usize {
        self.rgs.len()
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().copied().max().map_or(0, |m| m as usize + 1)
    }

    pub fn block_index(&self, v: usize) -> usize {
        self.rgs[v] as usize
    }

    pub fn rgs(&self) -> Vec<usize> {
        self.rgs.iter().map(|&b| b as usize).collect()
    }

    /// Blocks as sorted vertex lists, in block-index order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (v, &b) in self.rgs.iter().enumerate() {
            out[b as usize].push(v);
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.block_count() == self.size()
    }

    pub fn is_indiscrete(&self) -> bool {
        self.block_count() == 1
    }

    /// Whether every block of `self` is contained in some block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        assert_eq!(self.size(), other.size(), "partitions of different sets");
        // Each self-block must map into a single other-block.
        let mut target = vec![usize::MAX; self.block_count()];
        for (v, &b) in self.rgs.iter().enumerate() {
            let t = other.rgs[v] as usize;
            let slot = &mut target[b as usize];
            if *slot == usize::MAX {
                *slot = t;
            } else if *slot != t {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.rgs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.rgs.iter().map(|&b| b as usize))
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<SetPartition, D::Error> {
        let rgs = Vec::<usize>::deserialize(deserializer)?;
        SetPartition::from_rgs(&rgs).map_err(serde::de::Error::custom)
    }
}

/// Iterator over all partitions of `{0..n-1}` in lexicographic
/// restricted-growth order; `1 <= n <= 13`.
pub fn enumerate_partitions(n: usize) -> Result<PartitionIter> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cannot enumerate partitions of the empty set".into(),
        ));
    }
    if n > MAX_PARTITION_SIZE {
        return Err(Error::SizeLimit {
            operation: "enumerate_partitions",
            limit: MAX_PARTITION_SIZE,
            actual: n,
        });
    }
    Ok(PartitionIter {
        next: Some(vec![0; n]),
    })
}

pub struct PartitionIter {
    next: Option<Vec<u8>>,
}

impl Iterator for PartitionIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let current = self.next.take()?;
        // Advance: find the rightmost position that may still grow, bump it,
        // and zero the suffix.
        let mut succ = current.clone();
        let mut advanced = false;
        for i in (1..succ.len()).rev() {
            let max_prefix = succ[..i].iter().copied().max().unwrap_or(0);
            if succ[i] <= max_prefix {
                succ[i] += 1;
                succ[i + 1..].iter_mut().for_each(|b| *b = 0);
                advanced = true;
                break;
            }
        }
        self.next = advanced.then_some(succ);
        Some(SetPartition { rgs: current })
    }
}
