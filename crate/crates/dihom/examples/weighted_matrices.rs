//! Matrix forms of the tree inequalities: weighted tree counts against
//! row/column-sum moments, and the sharp path bound for powers of a
//! nonnegative matrix.
//!
//! Run with `cargo run --example weighted_matrices`.

use dihom::homcount::{hom_weighted, NonnegMatrix};
use dihom::inequalities::{check_mv_path, check_weighted_tree};
use dihom::ratio::format_rational;
use dihom::{Orient, RootedDirectedTree};

fn main() {
    let a = NonnegMatrix::parse("3\n0 3/2 1\n1/2 0 0\n2 1/2 0\n").unwrap();
    println!("matrix:\n{}", a.to_text());

    let tree = RootedDirectedTree::parse_literal("0>1,0>2,3>0").unwrap();
    println!("{}", check_weighted_tree(&tree, &a));

    for p in 1..=4u32 {
        println!("{}", check_mv_path(p, &a).unwrap());
    }

    // the path count really is a matrix power sum
    let path = RootedDirectedTree::oriented_path(&[Orient::Out; 3]).unwrap();
    println!(
        "hom(path with 3 arcs, A) = {} = sum(A^3) = {}",
        format_rational(&hom_weighted(&path, &a)),
        format_rational(&a.power(3).unwrap().sum()),
    );
}
