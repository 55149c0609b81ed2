//! Time detection on growing sparse networks and fit the log-log slope.
//!
//! `cargo run --release --example scaling`

use cascode::cli::scaling;

pub fn main() {
    let report = scaling(&[200, 400, 800, 1600], 0).unwrap();
    println!("{:>6} {:>7} {:>5} {:>12}", "nodes", "edges", "runs", "median (s)");
    for p in &report.points {
        println!("{:>6} {:>7} {:>5} {:>12.6}", p.nodes, p.edges, p.repetitions, p.median_seconds);
    }
    println!("slope of ln(time) vs ln(|V||E|): {:.3}", report.slope);
}
