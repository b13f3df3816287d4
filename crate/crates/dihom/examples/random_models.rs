//! Random digraph models: seeded Erdos-Renyi digraphs, exact degree-moment
//! summaries with their sandwich bounds, and the exploration bound over a
//! whole tree family.
//!
//! Run with `cargo run --example random_models`.

use dihom::models::{degree_moment_summary, exploration_bound_report, gen_erdos_renyi_digraph};
use dihom::ratio::format_rational;

fn main() {
    let g = gen_erdos_renyi_digraph(24, 0.25, 2024).unwrap();
    println!("G(24, 0.25) with seed 2024 has {} arcs", g.arc_count());

    for h in 2..=4 {
        let s = degree_moment_summary(&g, h).unwrap();
        println!(
            "order {h}: mean deg_in^{} = {}, deg_out^{} = {}, total^{} = {} (sandwich {})",
            h - 1,
            format_rational(&s.mean_in_pow),
            h - 1,
            format_rational(&s.mean_out_pow),
            h - 1,
            format_rational(&s.mean_total_pow),
            s.sandwich_holds(),
        );
    }

    // every 4-vertex tree pattern against the degree-moment ceiling
    let report = exploration_bound_report(&g, 4).unwrap();
    println!(
        "\nexploration bound over {} tree patterns: all hold = {}, worst slack = {}",
        report.reports.len(),
        report.all_hold,
        format_rational(&report.worst_slack),
    );
    for r in report.reports.iter().take(3) {
        println!("  {r}");
    }
}
