//! Partition quality (modularity) and partition agreement (NMI).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

/// Name of the NMI normalisation, echoed into result files.
pub const NMI_VARIANT: &str = "arithmetic: 2*I(A;B)/(H(A)+H(B)), natural log";

/// Name of the modularity definition, echoed into result files.
pub const MODULARITY_VARIANT: &str = "Newman-Girvan: sum_c [e_c/m - (d_c/2m)^2]";

/// Newman-Girvan modularity
/// `Q = (1/2m) Σ_ij (A_ij − k_i k_j / 2m) δ(c_i, c_j)`,
/// evaluated per community as `Σ_c e_c/m − (d_c/2m)²` where `e_c` counts
/// intra-community edges and `d_c` sums degrees.
pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    if p.node_count() != g.node_count() {
        return Err(Error::PartitionMismatch {
            left: g.node_count(),
            right: p.node_count(),
        });
    }
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let k = p.community_count();
    let mut internal = vec![0usize; k];
    let mut degree = vec![0usize; k];
    for v in 0..g.node_count() {
        degree[p.label(v)] += g.degree(v);
    }
    for (u, v) in g.edges() {
        if p.label(u) == p.label(v) {
            internal[p.label(u)] += 1;
        }
    }
    let m = g.edge_count() as f64;
    Ok(internal
        .iter()
        .zip(&degree)
        .map(|(&e, &d)| {
            let share = d as f64 / (2.0 * m);
            e as f64 / m - share * share
        })
        .sum())
}

/// Co-occurrence counts between two partitions of the same node set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfusionTable {
    counts: Vec<Vec<usize>>,
    row_totals: Vec<usize>,
    col_totals: Vec<usize>,
    total: usize,
}

impl ConfusionTable {
    pub fn new(a: &Partition, b: &Partition) -> Result<Self> {
        if a.node_count() != b.node_count() {
            return Err(Error::PartitionMismatch {
                left: a.node_count(),
                right: b.node_count(),
            });
        }
        let mut counts = vec![vec![0usize; b.community_count()]; a.community_count()];
        for (&i, &j) in a.labels().iter().zip(b.labels()) {
            counts[i][j] += 1;
        }
        let row_totals: Vec<usize> = counts.iter().map(|row| row.iter().sum()).collect();
        let col_totals: Vec<usize> = (0..b.community_count())
            .map(|j| counts.iter().map(|row| row[j]).sum())
            .collect();
        Ok(ConfusionTable {
            counts,
            row_totals,
            col_totals,
            total: a.node_count(),
        })
    }

    pub fn count(&self, i: usize, j: usize) -> usize {
        self.counts[i][j]
    }

    pub fn row_totals(&self) -> &[usize] {
        &self.row_totals
    }

    pub fn col_totals(&self) -> &[usize] {
        &self.col_totals
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// True when every row and every column has exactly one non-zero cell,
    /// i.e. the partitions agree up to renaming.
    pub fn is_bijection(&self) -> bool {
        self.counts
            .iter()
            .zip(&self.row_totals)
            .all(|(row, &total)| row.contains(&total))
            && self.col_totals.iter().enumerate().all(|(j, &total)| {
                self.counts.iter().any(|row| row[j] == total)
            })
    }

    fn entropy(totals: &[usize], n: f64) -> f64 {
        totals
            .iter()
            .filter(|&&c| c > 0)
            .map(|&c| {
                let p = c as f64 / n;
                -p * p.ln()
            })
            .sum()
    }

    pub fn entropy_a(&self) -> f64 {
        Self::entropy(&self.row_totals, self.total as f64)
    }

    pub fn entropy_b(&self) -> f64 {
        Self::entropy(&self.col_totals, self.total as f64)
    }

    /// Terms are summed in sorted order, so swapping the two partitions gives
    /// a bit-identical value.
    pub fn mutual_information(&self) -> f64 {
        let n = self.total as f64;
        let mut terms = Vec::new();
        for (i, row) in self.counts.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let nij = c as f64;
                let expected = self.row_totals[i] as f64 * self.col_totals[j] as f64;
                terms.push(nij / n * (nij * n / expected).ln());
            }
        }
        terms.sort_by(f64::total_cmp);
        terms.iter().sum()
    }
}

/// Normalized mutual information `2 I(A;B) / (H(A) + H(B))`, natural logs.
///
/// Partitions equal up to renaming score exactly 1.0, including two
/// single-block partitions. A single-block partition against anything else
/// scores 0.0.
pub fn nmi(a: &Partition, b: &Partition) -> Result<f64> {
    let table = ConfusionTable::new(a, b)?;
    if table.total() == 0 || table.is_bijection() {
        return Ok(1.0);
    }
    let denominator = table.entropy_a() + table.entropy_b();
    if denominator <= 0.0 {
        return Ok(0.0);
    }
    let value = 2.0 * table.mutual_information() / denominator;
    Ok(value.clamp(0.0, 1.0))
}
