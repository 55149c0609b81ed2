//! Cascaded leader-follower community detection.
//!
//! 1. Compute betweenness for every node.
//! 2. Elect leaders: nodes scoring at least as high as each of their neighbours.
//! 3. Give each leader its own label, ranked by descending [`TieBreakKey`].
//! 4. Spread labels in waves: every node in the current frontier claims its
//!    still-unlabelled neighbours, which become the next frontier.
//! 5. Leaders that claimed nobody in the first wave adopt the plurality label of
//!    their neighbourhood.
//!
//! Everything is a deterministic function of the graph and a `u64` seed. The
//! seed only shuffles the salt used to order nodes of equal score; it never
//! decides who is a leader.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::centrality::{betweenness, CentralityMap};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

const UNLABELED: usize = usize::MAX;

/// Ordering key: betweenness first, then a seeded per-node salt.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TieBreakKey {
    pub score: f64,
    pub salt: usize,
}

impl Eq for TieBreakKey {}

impl Ord for TieBreakKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.score
            .total_cmp(&other.score)
            .then(self.salt.cmp(&other.salt))
    }
}

impl PartialOrd for TieBreakKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Seeded salts: `salt(v)` is `v`'s position in a random permutation of the
/// node ids, so salts are distinct and keys are a strict total order.
#[derive(Debug, Clone)]
pub struct Salts(Vec<usize>);

impl Salts {
    pub fn new(node_count: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..node_count).collect();
        perm.shuffle(&mut rng);
        Salts(perm)
    }

    pub fn salt(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn key(&self, centrality: &CentralityMap, v: usize) -> TieBreakKey {
        TieBreakKey {
            score: centrality.score(v),
            salt: self.0[v],
        }
    }

    /// Sorts `nodes` by descending key.
    fn sort_descending(&self, centrality: &CentralityMap, nodes: &mut [usize]) {
        nodes.sort_by_key(|&v| std::cmp::Reverse(self.key(centrality, v)));
    }
}

/// One frontier node handing its label to the neighbours it reached first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub claimer: usize,
    /// Ascending node ids.
    pub claimed: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrphanReassignment {
    pub leader: usize,
    pub old_label: usize,
    pub new_label: usize,
}

/// Audit record of one detection run.
///
/// Labels mentioned here are pre-compaction labels, i.e. ranks in
/// `leader_order`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CascadeTrace {
    /// Elected leaders, ascending id.
    pub leader_set: Vec<usize>,
    /// Elected leaders by descending key; position is the label.
    pub leader_order: Vec<usize>,
    /// Non-empty claims, grouped by wave, in execution order.
    pub rounds: Vec<Vec<Claim>>,
    /// Every orphan leader visited by the reassignment sweep, in sweep order.
    /// `old_label == new_label` when the neighbourhood plurality was its own label.
    pub orphan_reassignments: Vec<OrphanReassignment>,
}

impl CascadeTrace {
    /// Leaders that claimed no follower in the first wave.
    pub fn orphan_leaders(&self) -> Vec<usize> {
        let mut claimers: Vec<usize> = self
            .rounds
            .first()
            .map(|round| round.iter().map(|c| c.claimer).collect())
            .unwrap_or_default();
        claimers.sort_unstable();
        self.leader_order
            .iter()
            .copied()
            .filter(|l| claimers.binary_search(l).is_err())
            .collect()
    }

    /// Rebuilds the cascade labels from the recorded claims alone.
    pub fn replay_cascade(&self, node_count: usize) -> Vec<usize> {
        let mut labels = vec![UNLABELED; node_count];
        for (rank, &leader) in self.leader_order.iter().enumerate() {
            labels[leader] = rank;
        }
        for round in &self.rounds {
            for claim in round {
                let label = labels[claim.claimer];
                for &v in &claim.claimed {
                    labels[v] = label;
                }
            }
        }
        labels
    }

    /// Replays the claims and the orphan sweep, giving labels before compaction.
    pub fn replay(&self, node_count: usize) -> Vec<usize> {
        let mut labels = self.replay_cascade(node_count);
        for r in &self.orphan_reassignments {
            labels[r.leader] = r.new_label;
        }
        labels
    }
}

/// Nodes whose score is `>=` every neighbour's score, ascending id. Isolated
/// nodes qualify vacuously.
pub fn find_leaders(g: &Graph, centrality: &CentralityMap) -> Vec<usize> {
    (0..g.node_count())
        .filter(|&v| {
            let own = centrality.score(v);
            g.adj(v).iter().all(|&u| own >= centrality.score(u))
        })
        .collect()
}

/// Labels leaders by rank and runs the claim waves until every node is
/// labelled. Returns pre-compaction labels (leader ranks) and the trace.
///
/// Within a wave, claimers go in descending key order and the first claim on
/// a node wins; each claimer takes its unlabelled neighbours in ascending id.
pub fn cascade_assign(
    g: &Graph,
    centrality: &CentralityMap,
    leaders: &[usize],
    seed: u64,
) -> (Vec<usize>, CascadeTrace) {
    let salts = Salts::new(g.node_count(), seed);
    let mut leader_set = leaders.to_vec();
    leader_set.sort_unstable();
    leader_set.dedup();
    let mut leader_order = leader_set.clone();
    salts.sort_descending(centrality, &mut leader_order);

    let mut labels = vec![UNLABELED; g.node_count()];
    for (rank, &leader) in leader_order.iter().enumerate() {
        labels[leader] = rank;
    }

    let mut rounds = Vec::new();
    let mut frontier = leader_order.clone();
    while !frontier.is_empty() {
        let mut round = Vec::new();
        let mut next = Vec::new();
        for &claimer in &frontier {
            let label = labels[claimer];
            let claimed: Vec<usize> = g
                .adj(claimer)
                .iter()
                .copied()
                .filter(|&u| labels[u] == UNLABELED)
                .collect();
            if claimed.is_empty() {
                continue;
            }
            for &u in &claimed {
                labels[u] = label;
            }
            next.extend_from_slice(&claimed);
            round.push(Claim { claimer, claimed });
        }
        if round.is_empty() {
            break;
        }
        rounds.push(round);
        salts.sort_descending(centrality, &mut next);
        frontier = next;
    }

    let trace = CascadeTrace {
        leader_set,
        leader_order,
        rounds,
        orphan_reassignments: Vec::new(),
    };
    (labels, trace)
}

/// Moves every follower-less leader (first-wave claimers excluded, isolated
/// nodes skipped) to the most common label among its neighbours, sweeping once
/// in descending key order and seeing labels already changed by the sweep.
///
/// Plurality ties go to the smallest label, i.e. the community whose leader
/// ranks highest; leader ranks come from the seeded salts, so the outcome is
/// seed-determined. Returns the compacted partition and appends the visited
/// orphans to `trace`.
pub fn reassign_orphan_leaders(g: &Graph, labels: &[usize], trace: &mut CascadeTrace) -> Partition {
    let mut labels = labels.to_vec();
    let mut tally: Vec<(usize, usize)> = Vec::new();
    for leader in trace.orphan_leaders() {
        let neighbors = g.adj(leader);
        if neighbors.is_empty() {
            continue;
        }
        tally.clear();
        let mut seen: Vec<usize> = neighbors.iter().map(|&u| labels[u]).collect();
        seen.sort_unstable();
        for chunk in seen.chunk_by(|a, b| a == b) {
            tally.push((chunk[0], chunk.len()));
        }
        // Highest count, then smallest label.
        let (new_label, _) = tally
            .iter()
            .copied()
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("non-empty neighbourhood");
        trace.orphan_reassignments.push(OrphanReassignment {
            leader,
            old_label: labels[leader],
            new_label,
        });
        labels[leader] = new_label;
    }
    Partition::from_labels(&labels)
}

/// Full pipeline on precomputed scores. Exposed so callers can reuse or
/// rescale a [`CentralityMap`].
pub fn detect_with_centrality(
    g: &Graph,
    centrality: &CentralityMap,
    seed: u64,
) -> Result<(Partition, CascadeTrace)> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if centrality.len() != g.node_count() {
        return Err(Error::param(format!(
            "centrality has {} scores for {} nodes",
            centrality.len(),
            g.node_count()
        )));
    }
    let leaders = find_leaders(g, centrality);
    let (labels, mut trace) = cascade_assign(g, centrality, &leaders, seed);
    let partition = reassign_orphan_leaders(g, &labels, &mut trace);
    Ok((partition, trace))
}

/// Detects communities in `g`. Deterministic in `(g, seed)`.
pub fn detect(g: &Graph, seed: u64) -> Result<(Partition, CascadeTrace)> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    detect_with_centrality(g, &betweenness(g), seed)
}
