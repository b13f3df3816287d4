//! Search for incomparability witnesses by sweeping all loopless hosts in
//! enumeration order, smallest sizes first.
//!
//! Run with `cargo run --release --example witness_search`.

use dihom::order::{compare_over_hosts, matrix_rows, OrderVerdict};
use dihom::RootedDirectedTree;

fn show(a: &RootedDirectedTree, b: &RootedDirectedTree, n_max: usize) {
    print!("{} vs {} (hosts up to n={n_max}): ", a.to_literal(), b.to_literal());
    match compare_over_hosts(a, b, n_max).unwrap() {
        OrderVerdict::IncomparableWitnessed(w) => {
            println!("incomparable");
            println!(
                "  {} > {} on {:?}",
                w.counts_gt.0,
                w.counts_gt.1,
                matrix_rows(&w.host_gt)
            );
            println!(
                "  {} < {} on {:?}",
                w.counts_lt.0,
                w.counts_lt.1,
                matrix_rows(&w.host_lt)
            );
            assert!(w.verify());
        }
        other => println!("{}", other.summary()),
    }
}

fn main() {
    let out_star = RootedDirectedTree::star(0, 3).unwrap();
    let in_star = RootedDirectedTree::star(3, 0).unwrap();
    show(&out_star, &in_star, 3);

    let s21 = RootedDirectedTree::star(2, 1).unwrap();
    let s12 = RootedDirectedTree::star(1, 2).unwrap();
    show(&s21, &s12, 3);

    // this pair agrees on every host with fewer than five vertices
    let forward = RootedDirectedTree::oriented_path_from_signs("+++").unwrap();
    let mixed = RootedDirectedTree::oriented_path_from_signs("+-+").unwrap();
    show(&forward, &mixed, 4);
    show(&forward, &mixed, 5);
}
