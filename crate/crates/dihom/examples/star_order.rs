//! Stars of a fixed size are pairwise incomparable. The separating hosts
//! are two-level digraphs: `m` sources into a centre, `n` sinks out of it,
//! where mixed-star counts collapse to the closed form `m^a n^b`.
//!
//! Run with `cargo run --example star_order`.

use dihom::homcount::star_hom;
use dihom::order::{compare_maxorder, source_sink_host, star_incomparability_suite};
use dihom::RootedDirectedTree;

fn main() {
    let h = 4;
    println!("closed forms on the two-level host (m=3, n=2), stars of size {h}:");
    let host = source_sink_host(3, 2).unwrap();
    for a in 0..=h {
        println!(
            "  hom(S_{{{a},{}}}) = {}",
            h - a,
            star_hom(a, h - a, &host).unwrap()
        );
    }

    println!("\nidentity and boundary reports (h=3, m=4, n=1):");
    for report in star_incomparability_suite(3, 4, 1).unwrap() {
        println!("  {report}");
    }

    // under the reversal-symmetrized comparison the pure star dominates
    // every same-size tree
    println!("\nreversal-symmetrized comparison against the pure star:");
    let star = RootedDirectedTree::star(0, 3).unwrap();
    for t in dihom::enumerate_directed_trees(3).unwrap() {
        let verdict = compare_maxorder(&t, &star, 4).unwrap();
        println!("  {} : {}", t.to_literal(), verdict.summary());
    }
}
