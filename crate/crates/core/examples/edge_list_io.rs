//! Parse a named edge list, inspect it, and write it back out.
//!
//! `cargo run --example edge_list_io`

use cascode::graph::parse_edge_list;

const TEXT: &str = "\
# a small social network
alice bob
bob carol
carol alice
carol dave
erin erin
";

pub fn main() {
    let g = parse_edge_list(TEXT).unwrap();
    println!("{} nodes, {} edges", g.node_count(), g.edge_count());
    for v in 0..g.node_count() {
        let neighbours: Vec<String> = g.neighbors(v).unwrap().iter().map(|&u| g.name(u)).collect();
        println!("{:<6} degree {} -> {}", g.name(v), g.degree(v), neighbours.join(", "));
    }

    let written = g.to_edge_list();
    print!("{written}");
    let again = parse_edge_list(&written).unwrap();
    assert_eq!(again.edge_count(), g.edge_count());
    assert_eq!(again.node_count(), g.node_count());
}
