//! Follow the greedy modularity baseline merge by merge.
//!
//! `cargo run --example greedy_baseline`

use cascode::benchgen::karate_club;
use cascode::greedy::greedy_modularity;

pub fn main() {
    let g = karate_club();
    let outcome = greedy_modularity(&g).unwrap();
    println!("start Q = {:.6}", outcome.initial_q);
    for (i, m) in outcome.merges.iter().enumerate() {
        println!("{:>2}: {} absorbs {} (dQ {:+.6}, Q {:.6})", i + 1, m.kept, m.absorbed, m.delta_q, m.q_after);
    }
    println!("final Q = {:.6}, {} communities", outcome.q, outcome.partition.community_count());
}
