//! Plant a ring of cliques, recover it, and walk through the cascade trace.
//!
//! `cargo run --example clique_constellation`

use cascode::benchgen::{clique_constellation, Wiring};
use cascode::cascade::detect;
use cascode::metrics::nmi;

pub fn main() {
    let net = clique_constellation(4, 4, Wiring::Ring, 1).unwrap();
    println!("{} nodes, {} edges", net.graph.node_count(), net.graph.edge_count());

    let (found, trace) = detect(&net.graph, 0).unwrap();
    println!("leaders in rank order: {:?}", trace.leader_order);
    for (i, wave) in trace.rounds.iter().enumerate() {
        println!("wave {}:", i + 1);
        for claim in wave {
            println!("  {} claims {:?}", claim.claimer, claim.claimed);
        }
    }
    for r in &trace.orphan_reassignments {
        println!("orphan leader {} moved from {} to {}", r.leader, r.old_label, r.new_label);
    }

    println!("communities found: {}", found.community_count());
    println!("NMI vs planted: {}", nmi(&found, &net.truth).unwrap());
}
