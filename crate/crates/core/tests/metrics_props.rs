mod common;

use cascode::metrics::{modularity, nmi, ConfusionTable};
use cascode::Partition;
use proptest::prelude::*;

#[test]
fn modularity_matches_double_sum_up_to_five_nodes() {
    for n in 1..=5 {
        let partitions = common::all_partitions(n);
        for g in common::all_graphs(n).filter(|g| g.edge_count() > 0) {
            for raw in &partitions {
                let fast = modularity(&g, &Partition::from_labels(raw)).unwrap();
                let slow = common::modularity_double_sum(&g, raw);
                assert!((fast - slow).abs() <= 1e-12, "{raw:?}: {fast} vs {slow}");
            }
        }
    }
}

#[test]
fn nmi_exhaustive_on_five_nodes() {
    let parts: Vec<Partition> = common::all_partitions(5)
        .iter()
        .map(|raw| Partition::from_labels(raw))
        .collect();
    for a in &parts {
        for b in &parts {
            let ab = nmi(a, b).unwrap();
            assert_eq!(ab, nmi(b, a).unwrap());
            assert!((0.0..=1.0).contains(&ab));
            assert_eq!(ab == 1.0, a.same_up_to_relabeling(b));
        }
    }
}

fn arb_labels() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    (1usize..40).prop_flat_map(|n| {
        (
            prop::collection::vec(0usize..6, n),
            prop::collection::vec(0usize..6, n),
        )
    })
}

proptest! {
    #[test]
    fn nmi_relabel_invariant((a, b) in arb_labels(), shift in 1usize..50) {
        let pa = Partition::from_labels(&a);
        let pb = Partition::from_labels(&b);
        // Reverse the label order and shift: a pure renaming.
        let renamed: Vec<usize> = a.iter().map(|&l| 100 - l + shift).collect();
        let pr = Partition::from_labels(&renamed);
        prop_assert_eq!(nmi(&pa, &pr).unwrap(), 1.0);
        let x = nmi(&pa, &pb).unwrap();
        let y = nmi(&pr, &pb).unwrap();
        prop_assert!((x - y).abs() < 1e-12);
    }

    #[test]
    fn confusion_table_is_consistent((a, b) in arb_labels()) {
        let pa = Partition::from_labels(&a);
        let pb = Partition::from_labels(&b);
        let t = ConfusionTable::new(&pa, &pb).unwrap();
        prop_assert_eq!(t.total(), a.len());
        prop_assert_eq!(t.row_totals().iter().sum::<usize>(), a.len());
        prop_assert_eq!(t.col_totals().iter().sum::<usize>(), a.len());
        prop_assert!(t.mutual_information() >= -1e-12);
    }

    #[test]
    fn modularity_relabel_invariant(seed in any::<u64>(), labels in prop::collection::vec(0usize..5, 12)) {
        let g = common::random_graph(12, 0.4, seed);
        prop_assume!(g.edge_count() > 0);
        let renamed: Vec<usize> = labels.iter().map(|&l| (l * 7 + 3) % 35).collect();
        let q1 = modularity(&g, &Partition::from_labels(&labels)).unwrap();
        let q2 = modularity(&g, &Partition::from_labels(&renamed)).unwrap();
        prop_assert!((q1 - q2).abs() < 1e-12);
        prop_assert!((-0.5..1.0).contains(&q1));
    }
}
