//! Detect communities in Zachary's karate club and compare against the greedy baseline.
//!
//! `cargo run --example karate_club`

use cascode::benchgen::karate_club;
use cascode::cascade::detect;
use cascode::cli::compare;
use cascode::metrics::modularity;

pub fn main() {
    let g = karate_club();
    let (partition, trace) = detect(&g, 0).expect("karate club is non-empty");

    println!("leaders (by rank): {:?}", trace.leader_order.iter().map(|&v| g.name(v)).collect::<Vec<_>>());
    for (label, block) in partition.blocks().iter().enumerate() {
        let names: Vec<String> = block.iter().map(|&v| g.name(v)).collect();
        println!("community {label}: {}", names.join(" "));
    }
    println!("Q = {:.6}", modularity(&g, &partition).unwrap());

    let row = compare(&g, 0).unwrap();
    println!(
        "greedy Q = {:.6} ({} communities), delta Q = {:+.6}, NMI between = {:.6}",
        row.q_greedy, row.communities_greedy, row.delta_q, row.nmi_between
    );
}
