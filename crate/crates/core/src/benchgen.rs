//! Benchmark networks with known communities.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

/// How the designated leaders of a clique constellation are wired together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Wiring {
    Ring,
    Complete,
}

impl FromStr for Wiring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ring" => Ok(Wiring::Ring),
            "complete" => Ok(Wiring::Complete),
            other => Err(Error::param(format!(
                "unknown wiring {other:?}, expected ring or complete"
            ))),
        }
    }
}

impl fmt::Display for Wiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Wiring::Ring => "ring",
            Wiring::Complete => "complete",
        })
    }
}

/// Parameters a planted network was generated from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "lowercase")]
pub enum GeneratorSpec {
    Gn {
        k: usize,
        n: usize,
        p_in: f64,
        p_out: f64,
        seed: u64,
    },
    Cliques {
        k: usize,
        s: usize,
        wiring: Wiring,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlantedNetwork {
    pub graph: Graph,
    pub truth: Partition,
    pub spec: GeneratorSpec,
}

/// Default intra-block probability for GN runs.
pub const DEFAULT_P_IN: f64 = 0.9;

/// Default inter-block probability: two expected external edges per node.
pub fn default_p_out(k: usize, n: usize) -> f64 {
    if k < 2 || n == 0 {
        return 0.0;
    }
    (2.0 / (n as f64 * (k - 1) as f64)).min(1.0)
}

/// Girvan-Newman style planted partition: `k` blocks of `n` nodes, node `v`
/// in block `v / n`. Each pair is drawn once, in lexicographic order, from a
/// ChaCha8 stream seeded with `seed`.
pub fn gn_benchmark(k: usize, n: usize, p_in: f64, p_out: f64, seed: u64) -> Result<PlantedNetwork> {
    if k < 2 {
        return Err(Error::param(format!("k must be at least 2, got {k}")));
    }
    if n < 2 {
        return Err(Error::param(format!("n must be at least 2, got {n}")));
    }
    let valid = |p: f64| (0.0..=1.0).contains(&p);
    if !valid(p_in) || !valid(p_out) || p_out > p_in {
        return Err(Error::param(format!(
            "need 0 <= p_out <= p_in <= 1, got p_in={p_in} p_out={p_out}"
        )));
    }

    let total = k * n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..total {
        for v in (u + 1)..total {
            let p = if u / n == v / n { p_in } else { p_out };
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let truth: Vec<usize> = (0..total).map(|v| v / n).collect();
    Ok(PlantedNetwork {
        graph: Graph::from_edges(total, edges)?,
        truth: Partition::from_labels(&truth),
        spec: GeneratorSpec::Gn {
            k,
            n,
            p_in,
            p_out,
            seed,
        },
    })
}

/// `k` cliques of size `s`; local node 0 of every clique is its leader and
/// leaders are wired in a ring or completely. With `k = 2` the ring is a
/// single edge. Node ids are shuffled by `seed`, so the structure does not
/// follow id order.
pub fn clique_constellation(k: usize, s: usize, wiring: Wiring, seed: u64) -> Result<PlantedNetwork> {
    if k < 2 {
        return Err(Error::param(format!("need at least 2 cliques, got {k}")));
    }
    if s < 3 {
        return Err(Error::param(format!("clique size must be at least 3, got {s}")));
    }
    let total = k * s;
    let mut ids: Vec<usize> = (0..total).collect();
    ids.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let node = |clique: usize, local: usize| ids[clique * s + local];

    let mut edges = Vec::new();
    for c in 0..k {
        for i in 0..s {
            for j in (i + 1)..s {
                edges.push((node(c, i), node(c, j)));
            }
        }
    }
    match wiring {
        Wiring::Ring if k == 2 => edges.push((node(0, 0), node(1, 0))),
        Wiring::Ring => {
            for c in 0..k {
                edges.push((node(c, 0), node((c + 1) % k, 0)));
            }
        }
        Wiring::Complete => {
            for a in 0..k {
                for b in (a + 1)..k {
                    edges.push((node(a, 0), node(b, 0)));
                }
            }
        }
    }

    let mut truth = vec![0; total];
    for c in 0..k {
        for local in 0..s {
            truth[node(c, local)] = c;
        }
    }
    Ok(PlantedNetwork {
        graph: Graph::from_edges(total, edges)?,
        truth: Partition::from_labels(&truth),
        spec: GeneratorSpec::Cliques { k, s, wiring, seed },
    })
}

const KARATE_EDGES: [(usize, usize); 78] = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8), (0, 10), (0, 11),
    (0, 12), (0, 13), (0, 17), (0, 19), (0, 21), (0, 31), (1, 2), (1, 3), (1, 7), (1, 13),
    (1, 17), (1, 19), (1, 21), (1, 30), (2, 3), (2, 7), (2, 8), (2, 9), (2, 13), (2, 27),
    (2, 28), (2, 32), (3, 7), (3, 12), (3, 13), (4, 6), (4, 10), (5, 6), (5, 10), (5, 16),
    (6, 16), (8, 30), (8, 32), (8, 33), (9, 33), (13, 33), (14, 32), (14, 33), (15, 32), (15, 33),
    (18, 32), (18, 33), (19, 33), (20, 32), (20, 33), (22, 32), (22, 33), (23, 25), (23, 27), (23, 29),
    (23, 32), (23, 33), (24, 25), (24, 27), (24, 31), (25, 31), (26, 29), (26, 33), (27, 33), (28, 31),
    (28, 33), (29, 32), (29, 33), (30, 32), (30, 33), (31, 32), (31, 33), (32, 33),
];

/// Zachary's karate club, members named `1`..`34` as in the original study.
pub fn karate_club() -> Graph {
    let names = (1..=34).map(|i| i.to_string()).collect();
    Graph::from_edges(34, KARATE_EDGES)
        .and_then(|g| g.with_names(names))
        .expect("embedded karate edge list is valid")
}

/// Truth sidecar text: one `node community` line per node.
pub fn truth_to_text(g: &Graph, truth: &Partition) -> String {
    let mut out = String::new();
    for v in 0..truth.node_count() {
        let _ = writeln!(out, "{} {}", g.name(v), truth.label(v));
    }
    out
}

/// Reads a truth sidecar against `g`'s node names. Every node must be listed
/// exactly once.
pub fn parse_truth(g: &Graph, text: &str) -> Result<Partition> {
    let mut raw = vec![None; g.node_count()];
    for (index, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: index + 1,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [name, community] = tokens[..] else {
            return Err(parse_err(format!("expected 2 fields, found {}", tokens.len())));
        };
        let v = g
            .id_of(name)
            .ok_or_else(|| parse_err(format!("unknown node {name:?}")))?;
        let label: usize = community
            .parse()
            .map_err(|_| parse_err(format!("bad community id {community:?}")))?;
        if raw[v].replace(label).is_some() {
            return Err(parse_err(format!("node {name:?} listed twice")));
        }
    }
    let labels = raw
        .iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| Error::param(format!("node {} has no community", g.name(v)))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::from_labels(&labels))
}
