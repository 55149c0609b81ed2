mod common;

use cascode::benchgen::karate_club;
use cascode::greedy::{greedy_modularity, greedy_modularity_partition};
use cascode::metrics::modularity;
use cascode::Partition;

#[test]
fn incremental_q_matches_recomputation() {
    for seed in 0..40u64 {
        let n = 5 + (seed as usize % 45);
        let g = common::random_graph(n, 0.15, seed);
        if g.edge_count() == 0 {
            continue;
        }
        let outcome = greedy_modularity(&g).unwrap();
        let singletons = Partition::singletons(n);
        assert!((outcome.initial_q - modularity(&g, &singletons).unwrap()).abs() < 1e-9);

        // Replay the merges and recompute Q from scratch after each one.
        let mut labels: Vec<usize> = (0..n).collect();
        let mut previous = outcome.initial_q;
        for merge in &outcome.merges {
            assert!(merge.delta_q > 0.0);
            assert!(merge.q_after > previous);
            previous = merge.q_after;
            for l in labels.iter_mut() {
                if *l == merge.absorbed {
                    *l = merge.kept;
                }
            }
            let fresh = modularity(&g, &Partition::from_labels(&labels)).unwrap();
            assert!((fresh - merge.q_after).abs() < 1e-9, "seed {seed}");
        }
        assert_eq!(Partition::from_labels(&labels), outcome.partition);
    }
}

#[test]
fn karate_reaches_reference_modularity() {
    // networkx greedy_modularity_communities gives 0.3806706114398422 with
    // three communities on the same graph.
    let g = karate_club();
    let p = greedy_modularity_partition(&g).unwrap();
    let q = modularity(&g, &p).unwrap();
    assert!(q >= 0.35);
    assert!((q - 0.3806706114398422).abs() < 1e-12);
    assert_eq!(p.community_count(), 3);
}

#[test]
fn baseline_is_deterministic() {
    let g = common::random_graph(60, 0.1, 4);
    assert_eq!(greedy_modularity(&g).unwrap(), greedy_modularity(&g).unwrap());
}
