mod common;

use cascode::centrality::{betweenness, betweenness_parallel, brute_force_betweenness};
use cascode::Graph;
use proptest::prelude::*;

#[test]
fn brandes_matches_path_enumeration_on_random_graphs() {
    let mut checked = 0;
    for (i, &p) in [0.1, 0.3, 0.5, 0.8].iter().enumerate() {
        for seed in 0..60u64 {
            let n = 2 + (seed as usize % 11);
            let g = common::random_graph(n, p, seed * 31 + i as u64);
            let fast = betweenness(&g);
            let slow = brute_force_betweenness(&g).unwrap();
            for v in 0..n {
                assert!(
                    (fast.score(v) - slow.score(v)).abs() <= 1e-9,
                    "n={n} p={p} seed={seed} node {v}: {} vs {}",
                    fast.score(v),
                    slow.score(v)
                );
            }
            checked += 1;
        }
    }
    assert!(checked >= 200);
}

#[test]
fn parallel_sum_is_bit_identical() {
    for seed in 0..5 {
        let g = common::random_graph(300, 0.03, seed);
        assert_eq!(betweenness_parallel(&g), betweenness(&g));
    }
    let karate = cascode::benchgen::karate_club();
    assert_eq!(betweenness_parallel(&karate), betweenness(&karate));
}

#[test]
fn karate_hub_scores() {
    // Unnormalised values from networkx.betweenness_centrality(normalized=False).
    let g = cascode::benchgen::karate_club();
    let c = betweenness(&g);
    let hub = |name: &str| c.score(g.id_of(name).unwrap());
    assert!((hub("1") - 231.0714285714286).abs() < 1e-9);
    assert!((hub("34") - 160.5515873015873).abs() < 1e-9);
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..13).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..40)
            .prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
    })
}

proptest! {
    #[test]
    fn scores_are_nonnegative_and_leaves_score_zero(g in arb_graph()) {
        let c = betweenness(&g);
        for v in 0..g.node_count() {
            prop_assert!(c.score(v) >= 0.0);
            if g.degree(v) <= 1 {
                prop_assert_eq!(c.score(v), 0.0);
            }
        }
    }

    #[test]
    fn disjoint_union_is_additive(a in arb_graph(), b in arb_graph()) {
        let offset = a.node_count();
        let edges = a.edges().chain(b.edges().map(|(u, v)| (u + offset, v + offset)));
        let union = Graph::from_edges(offset + b.node_count(), edges).unwrap();
        let whole = betweenness(&union);
        let left = betweenness(&a);
        let right = betweenness(&b);
        for v in 0..offset {
            prop_assert!((whole.score(v) - left.score(v)).abs() < 1e-9);
        }
        for v in 0..b.node_count() {
            prop_assert!((whole.score(v + offset) - right.score(v)).abs() < 1e-9);
        }
    }

    #[test]
    fn total_mass_counts_interior_vertices(g in arb_graph()) {
        // Σ_v b(v) = Σ_{s<t reachable} (d(s,t) − 1).
        let n = g.node_count();
        let mut expected = 0.0;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in g.neighbors(v).unwrap() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &d in &dist[s + 1..] {
                if d != usize::MAX {
                    expected += (d - 1) as f64;
                }
            }
        }
        prop_assert!((betweenness(&g).total() - expected).abs() < 1e-9);
    }
}
