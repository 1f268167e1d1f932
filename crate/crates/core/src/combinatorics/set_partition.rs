use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::Partition;
use crate::caps::Caps;
use crate::error::{check_cap, Error, Result};
use crate::rational::factorial;

/// Partition of `{1..k}` into non-empty blocks, stored canonically: each block
/// sorted, blocks ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates that the blocks are disjoint, non-empty and cover `{1..k}`.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let k: usize = blocks.iter().map(Vec::len).sum();
        let seen: BTreeSet<usize> = blocks.iter().flatten().copied().collect();
        if seen.len() != k || seen.iter().copied().ne(1..=k) {
            return Err(Error::Invalid(format!("blocks {blocks:?} do not partition 1..={k}")));
        }
        Ok(SetPartition { blocks })
    }

    /// Set partition from a restricted growth string (0-indexed block labels).
    fn from_labels(labels: &[usize]) -> Self {
        let n_blocks = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); n_blocks];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i + 1);
        }
        SetPartition { blocks }
    }

    /// `ker(p)`: the blocks are the fibres of `p` on `{1..k}`.
    pub fn kernel_of(map: &[usize]) -> Self {
        let mut labels = Vec::with_capacity(map.len());
        let mut seen: Vec<usize> = Vec::new();
        for v in map {
            let l = match seen.iter().position(|s| s == v) {
                Some(l) => l,
                None => {
                    seen.push(*v);
                    seen.len() - 1
                }
            };
            labels.push(l);
        }
        Self::from_labels(&labels)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `k`, the size of the ground set.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// `t(π)`: the block sizes as an integer partition.
    pub fn block_type(&self) -> Partition {
        Partition::from_unsorted(self.blocks.iter().map(Vec::len).collect())
    }

    /// Block label (0-indexed) of each point `1..=k`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.size()];
        for (l, b) in self.blocks.iter().enumerate() {
            for &i in b {
                labels[i - 1] = l;
            }
        }
        labels
    }
}

impl TryFrom<Vec<Vec<usize>>> for SetPartition {
    type Error = Error;

    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        SetPartition::new(blocks)
    }
}

impl From<SetPartition> for Vec<Vec<usize>> {
    fn from(p: SetPartition) -> Self {
        p.blocks
    }
}

/// Every set partition of `{1..k}`, ordered by restricted growth string.
pub fn set_partitions(k: usize, caps: &Caps) -> Result<Vec<SetPartition>> {
    check_cap("set partition size k", k, caps.set_partition_k)?;
    fn go(i: usize, k: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == k {
            out.push(SetPartition::from_labels(labels));
            return;
        }
        for l in 0..=max {
            labels.push(l);
            go(i + 1, k, max.max(l + 1), labels, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, 0, &mut Vec::new(), &mut out);
    Ok(out)
}

/// All `π` with `t(π) = μ`.
pub fn set_partitions_of_type(mu: &Partition, caps: &Caps) -> Result<Vec<SetPartition>> {
    Ok(set_partitions(mu.size(), caps)?
        .into_iter()
        .filter(|p| &p.block_type() == mu)
        .collect())
}

/// `p_μ = k! / (∏ μ_i! · ∏ m_j!)`.
pub fn set_partition_type_count(mu: &Partition) -> BigInt {
    let parts = mu.parts().iter().fold(BigInt::from(1), |acc, &p| acc * factorial(p));
    let mults = mu
        .multiplicities()
        .iter()
        .fold(BigInt::from(1), |acc, &(_, m)| acc * factorial(m));
    factorial(mu.size()) / (parts * mults)
}
