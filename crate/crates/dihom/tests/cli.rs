//! End-to-end checks of the command-line surface: exit codes, file formats,
//! and JSON round-trips.

use std::path::PathBuf;

use dihom::cli::run;
use dihom::digraph::Digraph;
use dihom::tree::RootedDirectedTree;

fn invoke(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["dihom".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let code = run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("dihom-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn five_vertex_host() -> PathBuf {
    write_temp(
        "app5.mat",
        "5\n0 1 1 0 0\n0 0 1 1 1\n1 1 0 0 0\n1 0 0 0 0\n1 0 0 0 0\n",
    )
}

#[test]
fn count_matches_known_values() {
    let host = five_vertex_host();
    let (code, out) = invoke(&["count", "--tree", "P +++", "--host", host.to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, "37"));
    let (code, out) = invoke(&["count", "--tree", "P +-+", "--host", host.to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, "36"));

    let edge = write_temp("edge.mat", "2\n0 0\n1 0\n");
    let (code, out) = invoke(&["count", "--tree", "S 0 3", "--host", edge.to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, "1"));

    let empty = write_temp("empty3.mat", "3\n0 0 0\n0 0 0\n0 0 0\n");
    let (code, out) = invoke(&["count", "--tree", "S 1 0", "--host", empty.to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, "0"));
}

#[test]
fn count_via_pattern_file_and_edge_list() {
    let host = five_vertex_host();
    let pattern = write_temp("p3.eg", "4 3\n0 1\n1 2\n2 3\n");
    let (code, out) = invoke(&[
        "count",
        "--pattern",
        pattern.to_str().unwrap(),
        "--host",
        host.to_str().unwrap(),
    ]);
    assert_eq!((code, out.trim()), (0, "37"));
}

#[test]
fn exit_codes_for_bad_input() {
    let host = five_vertex_host();
    // unreadable file and malformed content are parse errors
    let (code, _) = invoke(&["count", "--tree", "P ++", "--host", "/nonexistent.mat"]);
    assert_eq!(code, 2);
    let bad = write_temp("bad.mat", "2\n0 1\n");
    let (code, _) = invoke(&["count", "--tree", "P ++", "--host", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    // bad usage is a parse error too
    let (code, _) = invoke(&["count", "--host", host.to_str().unwrap()]);
    assert_eq!(code, 3); // missing pattern is semantic: flags parsed fine
    let (code, _) = invoke(&["frobnicate"]);
    assert_eq!(code, 2);
    // root out of range is semantic
    let (code, _) = invoke(&[
        "count",
        "--tree",
        "P ++",
        "--host",
        host.to_str().unwrap(),
        "--rooted",
        "99",
    ]);
    assert_eq!(code, 3);
}

#[test]
fn rooted_tail_weighted_and_injective_modes() {
    let host = write_temp("path3.mat", "3\n0 1 0\n0 0 1\n0 0 0\n");
    let (code, out) = invoke(&[
        "count",
        "--tree",
        "P ++",
        "--host",
        host.to_str().unwrap(),
        "--rooted",
        "0",
    ]);
    assert_eq!((code, out.trim()), (0, "1"));
    let (code, out) = invoke(&[
        "count",
        "--tree",
        "S 0 2",
        "--host",
        host.to_str().unwrap(),
        "--tail",
        "2",
    ]);
    assert_eq!((code, out.trim()), (0, "1"));
    let (code, out) = invoke(&[
        "count",
        "--tree",
        "P ++",
        "--host",
        host.to_str().unwrap(),
        "--injective",
    ]);
    assert_eq!((code, out.trim()), (0, "1"));
    let rat = write_temp("half.rat", "2\n0 1/2\n1/2 0\n");
    let (code, out) = invoke(&[
        "count",
        "--tree",
        "S 0 1",
        "--host",
        rat.to_str().unwrap(),
        "--weighted",
    ]);
    assert_eq!((code, out.trim()), (0, "1"));
}

#[test]
fn check_single_instances_and_exit_zero() {
    let host = five_vertex_host();
    for args in [
        vec!["check", "--inequality", "main", "--tree", "P +++", "--host", host.to_str().unwrap()],
        vec!["check", "--inequality", "star-holder", "--n", "3", "--k", "1", "--host", host.to_str().unwrap()],
        vec!["check", "--inequality", "geom-mean", "--tree", "P +-+", "--host", host.to_str().unwrap()],
        vec!["check", "--inequality", "tail", "--tree", "P ++", "--host", host.to_str().unwrap(), "--delta", "0", "--alpha", "0"],
        vec!["check", "--inequality", "envelope", "--tree", "P ++", "--host", host.to_str().unwrap(), "--p", "2"],
        vec!["check", "--inequality", "moments", "--tree", "S 1 2", "--host", host.to_str().unwrap()],
    ] {
        let (code, out) = invoke(&args);
        assert_eq!(code, 0, "args {args:?} output {out}");
    }
    let rat = write_temp("m.rat", "2\n1 1/2\n0 2\n");
    let (code, _) = invoke(&["check", "--inequality", "mv-path", "--p", "2", "--matrix", rat.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, _) = invoke(&["check", "--inequality", "weighted", "--tree", "P ++", "--matrix", rat.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, _) = invoke(&["check", "--inequality", "unknown", "--tree", "P ++"]);
    assert_eq!(code, 3);
}

#[test]
fn check_suite_json_shape() {
    let (code, out) = invoke(&[
        "check",
        "--inequality",
        "tail",
        "--suite",
        "25",
        "--seed",
        "7",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["schema"], "dihom/1");
    assert_eq!(v["all_hold"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 50); // two constants per instance
    assert!(v["max_tail_ratio"].as_f64().unwrap() <= 4.0 + 1e-9);
    for r in v["reports"].as_array().unwrap() {
        assert!(r["lhs"].is_string());
        assert_eq!(r["holds"], true);
    }
}

#[test]
fn search_json_round_trips() {
    let (code, out) = invoke(&[
        "search", "--family", "trees-k3", "--nmax", "3", "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    let pairs = v["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 28);
    for pair in pairs {
        // emitted literals re-parse to trees
        for lit in pair["pair"].as_array().unwrap() {
            RootedDirectedTree::parse_literal(lit.as_str().unwrap()).unwrap();
        }
        // emitted hosts re-parse and reproduce the stored counts
        if pair["result"]["verdict"] == "incomparable" {
            let w = &pair["result"]["witness"];
            for side in ["host_gt", "host_lt"] {
                let rows: Vec<String> = w[side]["matrix"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|r| r.as_str().unwrap().to_string())
                    .collect();
                let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
                let host = Digraph::from_rows(&refs).unwrap();
                assert_eq!(host.vertex_count(), w[side]["n"].as_u64().unwrap() as usize);
                let left = RootedDirectedTree::parse_literal(
                    w["pair"][0].as_str().unwrap(),
                )
                .unwrap();
                let count = dihom::homcount::hom_tree(&left, &host).to_string();
                assert_eq!(w[side]["counts"][0].as_str().unwrap(), count);
            }
        }
    }
}

#[test]
fn reproduce_appendix_flag_verifies() {
    let (code, out) = invoke(&["search", "--family", "trees-k3", "--nmax", "4", "--reproduce-appendix"]);
    assert_eq!(code, 0);
    assert!(out.contains("28 rows verified"));
}

#[test]
fn enumerate_trees_and_hosts() {
    let (code, out) = invoke(&["enumerate", "--what", "trees", "--size", "3"]);
    assert_eq!(code, 0);
    let lits: Vec<&str> = out.trim().lines().collect();
    assert_eq!(lits.len(), 8);
    for lit in lits {
        RootedDirectedTree::parse_literal(lit).unwrap();
    }
    let (code, out) = invoke(&["enumerate", "--what", "hosts", "--size", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim().lines().count(), 4);
    let (code, out) = invoke(&["enumerate", "--what", "hosts", "--size", "2", "--canonical"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim().lines().count(), 3);
    let (code, _) = invoke(&["enumerate", "--what", "hosts", "--size", "9"]);
    assert_eq!(code, 3);
}

#[test]
fn kernel_eval_and_experiment() {
    let kernel = write_temp("tri.k", "3\n1/3 1/3 1/3\n0 1 0\n0 0 1\n1 0 0\n");
    let (code, out) = invoke(&["kernel", "--op", "eval", "--kernel", kernel.to_str().unwrap(), "--pattern", "P ++"]);
    assert_eq!((code, out.trim()), (0, "1/9"));
    let (code, out) = invoke(&[
        "experiment", "--name", "heavy-tail", "--d-root", "3", "--samples", "400",
        "--seed", "5", "--json",
    ]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["envelope_violations"], 0);
    assert_eq!(v["fractional_bound_holds"], true);
}

#[test]
fn workers_env_var_overrides_flag() {
    std::env::set_var("DIHOM_WORKERS", "2");
    let (code, with_env) = invoke(&["enumerate", "--what", "trees", "--size", "3", "--workers", "1"]);
    std::env::remove_var("DIHOM_WORKERS");
    assert_eq!(code, 0);
    let (code, plain) = invoke(&["enumerate", "--what", "trees", "--size", "3"]);
    assert_eq!(code, 0);
    assert_eq!(with_env, plain);
}

#[test]
fn json_count_uses_decimal_strings() {
    let host = five_vertex_host();
    let (code, out) = invoke(&[
        "count", "--tree", "P +++", "--host", host.to_str().unwrap(), "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["count"], "37");
    assert_eq!(v["schema"], "dihom/1");
    assert_eq!(v["exact"], true);
}
