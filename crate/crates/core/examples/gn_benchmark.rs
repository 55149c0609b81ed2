//! Run both detectors over a few planted-partition (GN) networks.
//!
//! `cargo run --release --example gn_benchmark`

use cascode::benchgen::{default_p_out, DEFAULT_P_IN};
use cascode::cli::bench;

pub fn main() {
    let (k, n) = (5, 10);
    let p_out = default_p_out(k, n);
    let result = bench(k, n, DEFAULT_P_IN, Some(p_out), 5, 0).unwrap();

    println!("k={k} n={n} p_in={DEFAULT_P_IN} p_out={p_out:.4}");
    println!("seed  communities(truth/cascode/greedy)  nmi_cascode  nmi_greedy");
    for r in &result.runs {
        println!(
            "{:>4}  {:>2}/{:>2}/{:>2}  {:>26.4}  {:>10.4}",
            r.seed, r.communities_truth, r.communities_cascode, r.communities_greedy, r.nmi_cascode, r.nmi_greedy
        );
    }
    let a = &result.aggregate;
    println!(
        "mean NMI cascode {:.4}, greedy {:.4}, mean |dNMI| {:.4}",
        a.mean_nmi_cascode, a.mean_nmi_greedy, a.mean_abs_delta_nmi
    );
}
