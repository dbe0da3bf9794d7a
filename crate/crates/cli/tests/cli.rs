use std::process::{Command, Output};

use serde_json::Value;

fn lpl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpl"))
        .args(args)
        .arg("--quiet")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_cube_connected_cycles() {
    let v = json(&lpl(&["analyze", "--family", "ccc", "--n", "4", "--transitive"]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["report"]["lambda"], 3);
    assert_eq!(v["report"]["lambda_prime"], 4);
    assert_eq!(v["report"]["lambda_prime_optimal"], true);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        &["analyze", "--family", "random-regular", "--n", "12", "--d", "5", "--seed", "9", "--brute-force-check"][..],
        &["verify", "--suite", "random", "--seed", "4", "--count", "6"][..],
        &["atom", "--family", "cayley-sdp", "--n", "6", "--gens", "1,2", "--transitive"][..],
    ] {
        let a = lpl(args);
        let b = lpl(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn edge_list_round_trip_preserves_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let path_str = path.to_str().unwrap();
    let family = ["--family", "circulant", "--n", "10", "--gens", "2,5"];
    let built = lpl(&[&["construct", "--format", "edge-list", "--out", path_str][..], &family[..]].concat());
    assert!(built.status.success());
    let from_file = json(&lpl(&["analyze", "--input", path_str]));
    let in_memory = json(&lpl(&[&["analyze"][..], &family[..]].concat()));
    assert_eq!(from_file["report"], in_memory["report"]);
}

#[test]
fn replacement_product_matches_family() {
    let replaced = json(&lpl(&[
        "analyze", "--replacement", "--g1", "hypercube:3", "--g2", "cycle:3", "--rotation", "dims",
    ]));
    assert_eq!(replaced["report"]["vertex_count"], 24);
    assert_eq!(replaced["report"]["lambda_prime"], 3);
}

#[test]
fn construct_formats() {
    let out = lpl(&["construct", "--family", "circulant", "--n", "8", "--gens", "1,3", "--format", "dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph G {"));
    assert_eq!(text.matches(" -- ").count(), 16);
    let v = json(&lpl(&["construct", "--family", "hypercube", "--n", "3"]));
    assert_eq!(v["edge_count"], 12);
}

#[test]
fn degree_gap_construction() {
    let v = json(&lpl(&["verify", "--problem-1-4", "--d", "5", "--s", "1"]));
    assert_eq!(v["result"]["lambda_prime"], 6);
    assert_eq!(v["result"]["lambda"], 5);
    assert_eq!(v["result"]["order"], 384);
    assert_eq!(v["summary"]["fails"], 0);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "--degree-gap", "--d", "4", "--s", "1"][..],
        &["analyze", "--family", "wheel", "--n", "5"][..],
        &["analyze", "--input", "/nonexistent/graph.txt"][..],
        &["analyze", "--family", "circulant", "--n", "8"][..],
        &["analyze", "--family", "cycle", "--n", "6", "--format", "dot"][..],
        &["construct", "--family", "cycle"][..],
        &["frobnicate"][..],
    ] {
        assert_eq!(lpl(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_edge_list_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3 2\n0 1\n1 1\n").unwrap();
    let out = lpl(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop"));
}
