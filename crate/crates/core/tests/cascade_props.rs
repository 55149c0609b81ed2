mod common;

use cascode::benchgen::{clique_constellation, gn_benchmark, Wiring};
use cascode::cascade::{cascade_assign, detect, detect_with_centrality, find_leaders};
use cascode::centrality::betweenness;
use cascode::metrics::nmi;
use cascode::{Graph, Partition};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..30).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..90)
            .prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
    })
}

proptest! {
    #[test]
    fn leaders_are_local_maxima(g in arb_graph()) {
        let c = betweenness(&g);
        let leaders = find_leaders(&g, &c);
        for &l in &leaders {
            for &u in g.neighbors(l).unwrap() {
                prop_assert!(c.score(l) >= c.score(u));
                // Adjacent leaders can only tie.
                if leaders.contains(&u) {
                    prop_assert_eq!(c.score(l), c.score(u));
                }
            }
        }
    }

    #[test]
    fn detect_covers_every_node(g in arb_graph(), seed in any::<u64>()) {
        let (p, _) = detect(&g, seed).unwrap();
        prop_assert_eq!(p.node_count(), g.node_count());
        let mut used = vec![false; p.community_count()];
        for &l in p.labels() {
            used[l] = true;
        }
        prop_assert!(used.iter().all(|&u| u));
    }

    #[test]
    fn detect_is_deterministic(g in arb_graph(), seed in any::<u64>()) {
        prop_assert_eq!(detect(&g, seed).unwrap(), detect(&g, seed).unwrap());
    }

    #[test]
    fn rescaled_scores_give_same_result(
        g in arb_graph(),
        seed in any::<u64>(),
        exponent in -20i32..20,
        factor in 0.01f64..100.0,
    ) {
        let c = betweenness(&g);
        let base = detect_with_centrality(&g, &c, seed).unwrap();
        for scale in [2f64.powi(exponent), factor] {
            let scaled = c.scaled(scale);
            prop_assert_eq!(find_leaders(&g, &scaled), find_leaders(&g, &c));
            prop_assert_eq!(&detect_with_centrality(&g, &scaled, seed).unwrap().0, &base.0);
        }
    }

    #[test]
    fn trace_accounts_for_every_node(g in arb_graph(), seed in any::<u64>()) {
        let c = betweenness(&g);
        let leaders = find_leaders(&g, &c);
        let (labels, trace) = cascade_assign(&g, &c, &leaders, seed);

        // Each non-leader is claimed exactly once; leaders never are.
        let mut claimed = vec![0usize; g.node_count()];
        for round in &trace.rounds {
            for claim in &round.claimed_nodes() {
                claimed[*claim] += 1;
            }
        }
        for (v, &count) in claimed.iter().enumerate() {
            let expected = usize::from(!leaders.contains(&v));
            prop_assert_eq!(count, expected);
        }

        // Wave r+1 claimers are exactly nodes claimed in wave r.
        for pair in trace.rounds.windows(2) {
            let previous = pair[0].claimed_nodes();
            for claim in &pair[1] {
                prop_assert!(previous.contains(&claim.claimer));
            }
        }
        if let Some(first) = trace.rounds.first() {
            for claim in first {
                prop_assert!(leaders.contains(&claim.claimer));
            }
        }

        prop_assert_eq!(trace.replay_cascade(g.node_count()), labels);
        let (p, full) = detect_with_centrality(&g, &c, seed).unwrap();
        prop_assert_eq!(Partition::from_labels(&full.replay(g.node_count())), p);
    }
}

trait ClaimedNodes {
    fn claimed_nodes(&self) -> Vec<usize>;
}

impl ClaimedNodes for Vec<cascode::cascade::Claim> {
    fn claimed_nodes(&self) -> Vec<usize> {
        self.iter().flat_map(|c| c.claimed.iter().copied()).collect()
    }
}

#[test]
fn exact_recovery_on_small_constellations() {
    for k in 2..=5 {
        for s in 3..=5 {
            for wiring in [Wiring::Ring, Wiring::Complete] {
                for seed in 0..3 {
                    let net = clique_constellation(k, s, wiring, seed).unwrap();
                    let (p, _) = detect(&net.graph, seed).unwrap();
                    assert_eq!(nmi(&p, &net.truth).unwrap(), 1.0, "k={k} s={s} {wiring} seed={seed}");
                }
            }
        }
    }
}

#[test]
fn disjoint_cliques_collapse_to_blocks() {
    for k in 2..=5 {
        for n in 2..=6 {
            for seed in 0..4 {
                let net = gn_benchmark(k, n, 1.0, 0.0, seed).unwrap();
                let (p, _) = detect(&net.graph, seed).unwrap();
                assert!(p.same_up_to_relabeling(&net.truth), "k={k} n={n} seed={seed}");
            }
        }
    }
}

#[test]
fn constellation_leaders_tie() {
    let net = clique_constellation(6, 4, Wiring::Ring, 3).unwrap();
    let c = betweenness(&net.graph);
    let leaders = find_leaders(&net.graph, &c);
    assert_eq!(leaders.len(), 6);
    let first = c.score(leaders[0]);
    assert!(leaders.iter().all(|&l| c.score(l) == first));
}
