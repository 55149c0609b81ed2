//! Shortest-path betweenness centrality.
//!
//! Scores are unnormalised and count each unordered pair `{s, t}` once:
//! `b(v) = Σ_{s<t, s≠v≠t} σ_st(v) / σ_st`. Unreachable pairs contribute nothing.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by [`brute_force_betweenness`].
pub const BRUTE_FORCE_MAX_NODES: usize = 16;

/// One betweenness score per node id.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityMap {
    scores: Vec<f64>,
}

impl CentralityMap {
    pub fn from_scores(scores: Vec<f64>) -> Self {
        CentralityMap { scores }
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn score(&self, v: usize) -> f64 {
        self.scores[v]
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// Multiplies every score by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        CentralityMap {
            scores: self.scores.iter().map(|s| s * factor).collect(),
        }
    }

    pub fn total(&self) -> f64 {
        self.scores.iter().sum()
    }
}

/// Reusable per-source buffers for one Brandes sweep.
struct Sweep {
    order: Vec<usize>,
    dist: Vec<usize>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    queue: VecDeque<usize>,
}

impl Sweep {
    fn new(n: usize) -> Self {
        Sweep {
            order: Vec::with_capacity(n),
            dist: vec![usize::MAX; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    /// Runs BFS from `source` and back-propagates dependencies. Afterwards
    /// `delta[v]` holds the dependency of `source` on `v` for every reached
    /// `v`, and `order` lists the reached nodes.
    fn run(&mut self, g: &Graph, source: usize) {
        for &v in &self.order {
            self.dist[v] = usize::MAX;
            self.sigma[v] = 0.0;
            self.delta[v] = 0.0;
        }
        self.order.clear();

        self.dist[source] = 0;
        self.sigma[source] = 1.0;
        self.queue.push_back(source);
        while let Some(v) = self.queue.pop_front() {
            self.order.push(v);
            let next = self.dist[v] + 1;
            for &w in g.adj(v) {
                if self.dist[w] == usize::MAX {
                    self.dist[w] = next;
                    self.queue.push_back(w);
                }
                if self.dist[w] == next {
                    self.sigma[w] += self.sigma[v];
                }
            }
        }

        for &w in self.order.iter().rev() {
            let dw = self.dist[w];
            if dw == 0 {
                continue;
            }
            let coeff = (1.0 + self.delta[w]) / self.sigma[w];
            for &v in g.adj(w) {
                if self.dist[v] == dw - 1 {
                    self.delta[v] += self.sigma[v] * coeff;
                }
            }
        }
    }

    fn accumulate_into(&self, source: usize, scores: &mut [f64]) {
        for &v in &self.order {
            if v != source {
                scores[v] += self.delta[v];
            }
        }
    }
}

/// Exact betweenness by Brandes' algorithm, `O(|V||E|)` time.
///
/// Per-source dependencies are summed in ascending source order.
pub fn betweenness(g: &Graph) -> CentralityMap {
    let n = g.node_count();
    let mut scores = vec![0.0; n];
    let mut sweep = Sweep::new(n);
    for source in 0..n {
        sweep.run(g, source);
        sweep.accumulate_into(source, &mut scores);
    }
    finish(scores)
}

/// Same result as [`betweenness`], bit for bit, with the per-source sweeps
/// spread over the rayon pool. Sources are processed in batches and their
/// dependency vectors are added in ascending source order.
pub fn betweenness_parallel(g: &Graph) -> CentralityMap {
    const BATCH: usize = 64;
    let n = g.node_count();
    let mut scores = vec![0.0; n];
    let sources: Vec<usize> = (0..n).collect();
    for batch in sources.chunks(BATCH) {
        let deltas: Vec<Vec<f64>> = batch
            .par_iter()
            .map_init(
                || Sweep::new(n),
                |sweep, &source| {
                    sweep.run(g, source);
                    let mut dep = vec![0.0; n];
                    sweep.accumulate_into(source, &mut dep);
                    dep
                },
            )
            .collect();
        // Adding zeros for unreached nodes leaves the sum unchanged, so this
        // matches the sequential association order exactly.
        for dep in &deltas {
            for (s, d) in scores.iter_mut().zip(dep) {
                *s += d;
            }
        }
    }
    finish(scores)
}

// Every unordered pair was visited from both ends.
fn finish(mut scores: Vec<f64>) -> CentralityMap {
    for s in &mut scores {
        *s /= 2.0;
    }
    CentralityMap { scores }
}

/// Betweenness by explicit enumeration of every shortest path of every pair.
///
/// Exponential in the worst case and only meant as an independent check on
/// [`betweenness`]; graphs above [`BRUTE_FORCE_MAX_NODES`] are rejected.
pub fn brute_force_betweenness(g: &Graph) -> Result<CentralityMap> {
    let n = g.node_count();
    if n > BRUTE_FORCE_MAX_NODES {
        return Err(Error::TooLarge {
            node_count: n,
            max: BRUTE_FORCE_MAX_NODES,
        });
    }
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|s| bfs_distances(g, s)).collect();
    let mut scores = vec![0.0; n];
    for s in 0..n {
        for t in (s + 1)..n {
            let Some(d_st) = dist[s][t] else { continue };
            let mut paths = Vec::new();
            let mut current = vec![s];
            enumerate_paths(g, &dist, t, d_st, &mut current, &mut paths);
            let total = paths.len() as f64;
            let mut through = vec![0usize; n];
            for path in &paths {
                for &v in &path[1..path.len() - 1] {
                    through[v] += 1;
                }
            }
            for (v, &count) in through.iter().enumerate() {
                if count > 0 {
                    scores[v] += count as f64 / total;
                }
            }
        }
    }
    Ok(CentralityMap { scores })
}

fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.node_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in g.adj(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn enumerate_paths(
    g: &Graph,
    dist: &[Vec<Option<usize>>],
    target: usize,
    length: usize,
    current: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) {
    let here = *current.last().unwrap();
    if here == target {
        paths.push(current.clone());
        return;
    }
    let step = current.len();
    for &next in g.adj(here) {
        // Stay on a geodesic: one hop further from the start, one hop closer to the end.
        if dist[current[0]][next] == Some(step) && dist[target][next] == Some(length - step) {
            current.push(next);
            enumerate_paths(g, dist, target, length, current, paths);
            current.pop();
        }
    }
}
