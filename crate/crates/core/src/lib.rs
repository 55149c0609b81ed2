//! Community detection by cascaded leader-follower label propagation.
//!
//! The pipeline in [`cascade::detect`] elects *leaders* (nodes whose shortest-path
//! betweenness is at least that of every neighbour), gives each leader its own
//! label, and lets labels flow outward one breadth-first wave at a time. Leaders
//! that end up without any follower are folded into the plurality label of their
//! neighbourhood.
//!
//! Around that core the crate ships what is needed to evaluate it:
//!
//! - [`graph`]: undirected simple graphs and the edge-list text format
//! - [`centrality`]: Brandes betweenness plus a brute-force oracle
//! - [`greedy`]: agglomerative greedy modularity maximisation (CNM-style baseline)
//! - [`metrics`]: modularity and normalized mutual information
//! - [`benchgen`]: planted-partition (GN) graphs, clique constellations, Zachary's karate club
//! - [`cli`]: the `cascode` command-line harness (detect, compare, bench, generate, scaling)
//!
//! ```
//! use cascode::{benchgen, cascade, metrics};
//!
//! let net = benchgen::clique_constellation(4, 3, benchgen::Wiring::Ring, 7).unwrap();
//! let (found, _trace) = cascade::detect(&net.graph, 0).unwrap();
//! assert_eq!(metrics::nmi(&found, &net.truth).unwrap(), 1.0);
//! ```

pub mod benchgen;
pub mod cascade;
pub mod centrality;
pub mod cli;
pub mod error;
pub mod graph;
pub mod greedy;
pub mod metrics;
pub mod partition;

pub use centrality::CentralityMap;
pub use error::{Error, Result};
pub use graph::Graph;
pub use partition::Partition;
