//! Enumerate directed trees up to isomorphism of the underlying digraph.
//!
//! Run with `cargo run --example enumerate_trees`.

use dihom::enumerate_directed_trees;

fn main() {
    for arcs in 1..=4 {
        let trees = enumerate_directed_trees(arcs).unwrap();
        println!("{arcs} arc(s): {} isomorphism classes", trees.len());
        if arcs == 3 {
            // the eight types: four stars and four oriented paths
            for t in &trees {
                println!("  {}", t.to_literal());
            }
        }
    }
}
