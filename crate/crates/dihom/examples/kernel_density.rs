//! Step-kernel configuration products: the exact identity with
//! homomorphism densities, invariance under block refinement, and
//! Monte-Carlo convergence of sampled densities.
//!
//! Run with `cargo run --release --example kernel_density`.

use dihom::enumerate_directed_trees;
use dihom::kernels::{
    config_product, directed_triangle, mc_density_check, sample_step_digraph, StepKernel,
};
use dihom::ratio::format_rational;

fn main() {
    let host = directed_triangle();
    let kernel = StepKernel::of_host(&host).unwrap();
    println!("kernel of the directed triangle:\n{}", kernel.to_text());

    println!("configuration products = homomorphism densities:");
    for t in enumerate_directed_trees(2).unwrap() {
        let d = t.as_digraph();
        let u = config_product(&d, &kernel);
        println!(
            "  {:<12} U = {:<6} (density {})",
            t.to_literal(),
            format_rational(&u),
            format_rational(&dihom::homcount::hom_density(&d, &host).unwrap()),
        );
    }

    let split = kernel.split_blocks();
    let two_path = enumerate_directed_trees(2).unwrap().pop().unwrap();
    println!(
        "block refinement keeps U fixed: {} = {}",
        format_rational(&config_product(&two_path.as_digraph(), &kernel)),
        format_rational(&config_product(&two_path.as_digraph(), &split)),
    );

    // a sampled digraph from the kernel, and density concentration
    let g = sample_step_digraph(12, &kernel, 7).unwrap();
    println!("\nsampled 12-vertex digraph has {} arcs", g.arc_count());

    let pattern = dihom::RootedDirectedTree::oriented_path_from_signs("++")
        .unwrap()
        .as_digraph();
    let report = mc_density_check(&pattern, &kernel, 30, 500, 1).unwrap();
    println!(
        "mc: mean density {:.6} vs U = {:.6}, |err| {:.6} <= tolerance {:.6} ({})",
        report.mean_t,
        report.expected,
        report.abs_err,
        report.tolerance,
        if report.pass { "pass" } else { "FAIL" },
    );
}
