//! Undirected simple graphs with dense node ids.
//!
//! Node ids are `0..node_count`. Adjacency lists are sorted, duplicate-free and
//! symmetric, and never contain the node itself.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `node_count` nodes. Self-loops are dropped and
    /// parallel edges collapsed; endpoints must be below `node_count`.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); node_count];
        for (u, v) in edges {
            for node in [u, v] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange { node, node_count });
                }
            }
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        let mut degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: degree_sum / 2,
            names: None,
        })
    }

    /// Attaches external node names, one per id.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.node_count() {
            return Err(Error::param(format!(
                "{} names for {} nodes",
                names.len(),
                self.node_count()
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or(Error::NodeOutOfRange {
                node: v,
                node_count: self.node_count(),
            })
    }

    /// Unchecked adjacency access for internal hot loops.
    #[inline]
    pub(crate) fn adj(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// External name of `v`, falling back to the numeric id.
    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    /// Looks up the id of an external node name.
    pub fn id_of(&self, name: &str) -> Option<usize> {
        match &self.names {
            Some(names) => names.iter().position(|n| n == name),
            None => name.parse().ok().filter(|&v| v < self.node_count()),
        }
    }

    /// Serializes to edge-list text that [`parse_edge_list`] maps back to the
    /// same ids.
    ///
    /// Lines are emitted in order of their larger endpoint so that names first
    /// appear in id order. A node with no lower-id neighbour is declared with a
    /// `v v` self-loop line, which the parser registers and then drops.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for u in 0..self.node_count() {
            let lower = self.adjacency[u].iter().take_while(|&&v| v < u);
            let mut declared = false;
            for &v in lower {
                let _ = writeln!(out, "{} {}", self.name(v), self.name(u));
                declared = true;
            }
            if !declared {
                let name = self.name(u);
                let _ = writeln!(out, "{name} {name}");
            }
        }
        out
    }

    /// Checks the structural invariants by direct scan.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let mut degree_sum = 0;
        for (v, list) in self.adjacency.iter().enumerate() {
            degree_sum += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {v} is not strictly ascending"));
            }
            for &u in list {
                if u == v {
                    return Err(format!("self-loop at {v}"));
                }
                if u >= self.node_count() {
                    return Err(format!("neighbour {u} of {v} out of range"));
                }
                if self.adjacency[u].binary_search(&v).is_err() {
                    return Err(format!("edge {v}-{u} is not symmetric"));
                }
            }
        }
        if degree_sum != 2 * self.edge_count {
            return Err(format!(
                "edge_count {} but degree sum {degree_sum}",
                self.edge_count
            ));
        }
        Ok(())
    }
}

/// Parses whitespace-separated edge-list text.
///
/// Blank lines and lines starting with `#` are skipped. Names get ids in order
/// of first appearance; duplicate edges and self-loops are dropped, although a
/// node named only in a self-loop is still created.
pub fn parse_edge_list<'a>(text: &'a str) -> Result<Graph> {
    let mut ids: HashMap<&'a str, usize> = HashMap::new();
    let mut names: Vec<String> = Vec::new();
    let mut edges = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: index + 1,
                message: format!("expected 2 node names, found {}", tokens.len()),
            });
        }
        let mut endpoint = |name: &'a str| -> usize {
            let next = names.len();
            *ids.entry(name).or_insert_with(|| {
                names.push(name.to_string());
                next
            })
        };
        let u = endpoint(tokens[0]);
        let v = endpoint(tokens[1]);
        edges.push((u, v));
    }

    if names.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Graph::from_edges(names.len(), edges)?.with_names(names)
}
