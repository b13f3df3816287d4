//! The inequality checkers on concrete instances: the tree-vs-star bound,
//! the mixed-star Hölder bound, the geometric-mean reallocation step with
//! its full iteration trace, the tail-truncated bound, and the pointwise
//! envelope.
//!
//! Run with `cargo run --example inequality_checks`.

use num::rational::BigRational;

use dihom::homcount::WeightVector;
use dihom::inequalities::{
    check_main_bound, check_pointwise_envelope_uniform, check_star_holder,
    check_tail_bound, leaf_reallocation_trace, skeleton_leaves,
};
use dihom::{Digraph, RootedDirectedTree};

fn main() {
    let host = Digraph::from_rows(&["01100", "00111", "11000", "10000", "10000"]).unwrap();
    let path = RootedDirectedTree::oriented_path_from_signs("+++").unwrap();

    println!("{}", check_main_bound(&path, &host));
    println!("{}", check_star_holder(3, 1, &host).unwrap());

    let alpha = WeightVector::from_integers(&[1, 0, 0, 2]);
    println!("{}", check_tail_bound(&path, &host, 3, &alpha).unwrap());

    let p = BigRational::from_integer(2.into());
    println!("pointwise envelope at p = 2:");
    for report in check_pointwise_envelope_uniform(&path, &host, &p).unwrap() {
        println!("  {report}");
    }

    // iterate leaf reallocation until a pure star dominates the tree
    let spider = RootedDirectedTree::parse_literal("0>1,1>2,3>1,0>4,5>0").unwrap();
    println!(
        "\nreallocation trace for {} (skeleton leaves {:?}):",
        spider.to_literal(),
        skeleton_leaves(&spider)
    );
    for step in leaf_reallocation_trace(&spider, &host).unwrap() {
        println!(
            "  {} -> {}   [{}]",
            step.tree.to_literal(),
            step.chosen.to_literal(),
            step.report
        );
    }
}
