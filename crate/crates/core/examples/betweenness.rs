//! Betweenness centrality: Brandes, its parallel variant, and the brute-force oracle.
//!
//! `cargo run --example betweenness`

use cascode::centrality::{betweenness, betweenness_parallel, brute_force_betweenness};
use cascode::Graph;

pub fn main() {
    // Two triangles joined through node 3.
    let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]).unwrap();

    let fast = betweenness(&g);
    let parallel = betweenness_parallel(&g);
    let oracle = brute_force_betweenness(&g).unwrap();

    println!("node  brandes  oracle");
    for v in 0..g.node_count() {
        println!("{v:>4}  {:>7.3}  {:>6.3}", fast.score(v), oracle.score(v));
    }
    assert_eq!(fast, parallel);
    println!("total = {:.3}", fast.total());
}
