use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A hard assignment of every node to one community, labels compacted to `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    labels: Vec<usize>,
    community_count: usize,
}

impl Partition {
    /// Compacts arbitrary labels to `0..k`, preserving their relative order:
    /// the smallest raw label becomes 0.
    pub fn from_labels(raw: &[usize]) -> Self {
        let mut remap: BTreeMap<usize, usize> = raw.iter().map(|&l| (l, 0)).collect();
        for (next, slot) in remap.values_mut().enumerate() {
            *slot = next;
        }
        Partition {
            labels: raw.iter().map(|l| remap[l]).collect(),
            community_count: remap.len(),
        }
    }

    /// Builds a partition from explicit blocks of node ids. Every node in
    /// `0..node_count` must appear in exactly one block.
    pub fn from_blocks(node_count: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut raw = vec![usize::MAX; node_count];
        for (label, block) in blocks.iter().enumerate() {
            for &v in block {
                match raw.get_mut(v) {
                    Some(slot) if *slot == usize::MAX => *slot = label,
                    Some(_) => return Err(Error::param(format!("node {v} in two blocks"))),
                    None => return Err(Error::NodeOutOfRange { node: v, node_count }),
                }
            }
        }
        if let Some(v) = raw.iter().position(|&l| l == usize::MAX) {
            return Err(Error::param(format!("node {v} not covered by any block")));
        }
        Ok(Self::from_labels(&raw))
    }

    pub fn single_block(node_count: usize) -> Self {
        Self::from_labels(&vec![0; node_count])
    }

    pub fn singletons(node_count: usize) -> Self {
        Self::from_labels(&(0..node_count).collect::<Vec<_>>())
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn community_count(&self) -> usize {
        self.community_count
    }

    /// Node ids grouped by community, each block ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.community_count];
        for (v, &l) in self.labels.iter().enumerate() {
            blocks[l].push(v);
        }
        blocks
    }

    /// Relabels by first appearance in node order, so two partitions that agree
    /// up to renaming have equal canonical forms.
    pub fn canonical(&self) -> Vec<usize> {
        let mut seen = vec![usize::MAX; self.community_count];
        let mut next = 0;
        self.labels
            .iter()
            .map(|&l| {
                if seen[l] == usize::MAX {
                    seen[l] = next;
                    next += 1;
                }
                seen[l]
            })
            .collect()
    }

    pub fn same_up_to_relabeling(&self, other: &Partition) -> bool {
        self.node_count() == other.node_count() && self.canonical() == other.canonical()
    }
}
