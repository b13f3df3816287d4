//! Counting basics: exact homomorphism counts of directed trees into a
//! host, rooted counts, tail-truncated weighted counts, and weighted-matrix
//! counts.
//!
//! Run with `cargo run --example count_homomorphisms`.

use dihom::homcount::{
    hom_general, hom_rooted, hom_tail, hom_tree, hom_weighted, NonnegMatrix, TailCount,
    WeightVector,
};
use dihom::ratio::format_rational;
use dihom::{Digraph, RootedDirectedTree};

fn main() {
    // a 5-vertex host on which the two oriented 3-paths separate
    let host = Digraph::from_rows(&["01100", "00111", "11000", "10000", "10000"]).unwrap();
    let forward = RootedDirectedTree::oriented_path_from_signs("+++").unwrap();
    let mixed = RootedDirectedTree::oriented_path_from_signs("+-+").unwrap();

    println!("host: 5 vertices, {} arcs", host.arc_count());
    println!("hom(P+++)           = {}", hom_tree(&forward, &host));
    println!("hom(P+-+)           = {}", hom_tree(&mixed, &host));
    println!(
        "backtracking oracle = {}",
        hom_general(&forward.as_digraph(), &host)
    );

    // rooted counts: directed 2-walks from each vertex
    let two_path = RootedDirectedTree::oriented_path_from_signs("++").unwrap();
    let per_vertex: Vec<String> = (0..host.vertex_count())
        .map(|v| hom_rooted(&two_path, &host, v).unwrap().to_string())
        .collect();
    println!("2-walks from each vertex: {}", per_vertex.join(" "));

    // tail truncation with degree weights: keep root images of total degree
    // at least 4, weight each vertex image by its degree
    let alpha = WeightVector::from_integers(&[1, 0, 0]);
    match hom_tail(&two_path, &host, 4, &alpha).unwrap() {
        TailCount::Exact(c) => println!("tail-truncated weighted count = {c}"),
        TailCount::Approx(c) => println!("tail-truncated weighted count ~ {c}"),
    }

    // weighted host: rational arc weights instead of 0/1 adjacency
    let weights = NonnegMatrix::parse("2\n0 1/2\n1/3 0\n").unwrap();
    let arc = RootedDirectedTree::star(0, 1).unwrap();
    println!(
        "weighted single-arc count on a 2x2 matrix = {}",
        format_rational(&hom_weighted(&arc, &weights))
    );
}
