mod common;

use cascode::graph::parse_edge_list;
use cascode::Graph;
use proptest::prelude::*;

#[test]
fn karate_file_parses_to_canonical_counts() {
    let text = std::fs::read_to_string(common::data("karate.edgelist")).unwrap();
    let g = parse_edge_list(&text).unwrap();
    assert_eq!(g.node_count(), 34);
    assert_eq!(g.edge_count(), 78);
    g.validate().unwrap();
    // Same graph as the embedded copy once names are matched.
    let embedded = cascode::benchgen::karate_club();
    for (u, v) in embedded.edges() {
        let a = g.id_of(&embedded.name(u)).unwrap();
        let b = g.id_of(&embedded.name(v)).unwrap();
        assert!(g.neighbors(a).unwrap().contains(&b));
    }
}

#[test]
fn named_round_trip() {
    let g = parse_edge_list("carol dave\nalice bob\nbob carol\nerin erin\n").unwrap();
    let back = parse_edge_list(&g.to_edge_list()).unwrap();
    assert_eq!(back, g);
}

fn arb_edges() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..25).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..80)))
}

proptest! {
    #[test]
    fn serialize_then_parse_is_identity((n, edges) in arb_edges()) {
        let g = Graph::from_edges(n, edges).unwrap();
        let back = parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.node_count(), g.node_count());
        for v in 0..n {
            prop_assert_eq!(back.neighbors(v).unwrap(), g.neighbors(v).unwrap());
        }
        // And the textual form is stable.
        prop_assert_eq!(back.to_edge_list(), g.to_edge_list());
    }

    #[test]
    fn parsed_graphs_satisfy_invariants(
        lines in prop::collection::vec(("[a-f]{1,2}", "[a-f]{1,2}"), 1..60)
    ) {
        let text: String = lines.iter().map(|(a, b)| format!("{a} {b}\n")).collect();
        let g = parse_edge_list(&text).unwrap();
        prop_assert!(g.validate().is_ok());
        let sum: usize = (0..g.node_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }
}
