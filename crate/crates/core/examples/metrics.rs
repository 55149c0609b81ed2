//! Modularity and normalized mutual information on a small example.
//!
//! `cargo run --example metrics`

use cascode::metrics::{modularity, nmi, ConfusionTable};
use cascode::{Graph, Partition};

pub fn main() {
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
    let split = Partition::from_labels(&[0, 0, 0, 1, 1, 1]);
    let skewed = Partition::from_labels(&[0, 0, 1, 1, 1, 1]);

    println!("Q(split)  = {:.6}", modularity(&g, &split).unwrap());
    println!("Q(skewed) = {:.6}", modularity(&g, &skewed).unwrap());
    println!("Q(one)    = {:.6}", modularity(&g, &Partition::single_block(6)).unwrap());

    let table = ConfusionTable::new(&split, &skewed).unwrap();
    println!("H(split) = {:.6}, H(skewed) = {:.6}, I = {:.6}", table.entropy_a(), table.entropy_b(), table.mutual_information());
    println!("NMI = {:.6}", nmi(&split, &skewed).unwrap());
}
