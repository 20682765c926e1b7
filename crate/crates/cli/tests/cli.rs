use std::process::{Command, Output};

use serde_json::Value;

fn toposcope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toposcope"))
        .args(args)
        .env_remove("TOPOSCOPE_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("report is JSON")
}

#[test]
fn minimal_sober_on_three_points() {
    let o = toposcope(&["verify", "minimal-sober", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["verdict"], "PASS");
    assert_eq!(r["evidence"][0]["claim"], "6 minimal sober topologies = 6 total orders");
    assert!(r["elapsed_ms"].is_null());
}

#[test]
fn crt_chain_reports_a_witness() {
    let o = toposcope(&["verify", "crt-chain", "--max-index", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["params"]["max_index"], 4);
    assert!(r["evidence"][1]["claim"].as_str().unwrap().contains("first witness"));
}

#[test]
fn above_the_soft_cap_is_skipped() {
    let o = toposcope(&["verify", "t1-join", "--n", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let r = report(&o);
    assert_eq!(r["verdict"], "SKIP");
    assert!(r["note"].as_str().unwrap().contains("soft cap"));
}

#[test]
fn soft_cap_can_be_raised() {
    let o = Command::new(env!("CARGO_BIN_EXE_toposcope"))
        .args(["verify", "t1-join", "--n", "5"])
        .env("TOPOSCOPE_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(report(&o)["verdict"], "PASS");
}

#[test]
fn bad_input_exits_with_two() {
    for args in [&["verify", "no-such-suite"][..], &["verify", "t1-join", "--n", "7"], &["enumerate", "--n", "6"]] {
        let o = toposcope(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
}

#[test]
fn reports_are_deterministic_and_can_go_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let o = toposcope(&["verify", "tau-star", "--n", "3", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let first = std::fs::read(&path).unwrap();
    toposcope(&["verify", "tau-star", "--n", "3", "--out", p]);
    assert_eq!(std::fs::read(&path).unwrap(), first);
    let direct = toposcope(&["verify", "tau-star", "--n", "3"]);
    assert_eq!(direct.stdout, first);
}

#[test]
fn timing_is_opt_in() {
    let o = toposcope(&["verify", "remark-A", "--timing"]);
    assert!(report(&o)["elapsed_ms"].is_u64());
}

#[test]
fn enumerate_counts() {
    assert_eq!(stdout(&toposcope(&["enumerate", "--n", "3", "--format", "count"])), "29\n");
    assert_eq!(stdout(&toposcope(&["enumerate", "--n", "3", "--filter", "t0", "--format", "count"])), "19\n");
    assert_eq!(stdout(&toposcope(&["enumerate", "--n", "4", "--filter", "sober"])), "219\n");
}

#[test]
fn enumerate_json_lines() {
    let out = stdout(&toposcope(&["enumerate", "--n", "2", "--format", "json"]));
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().any(|v| v == &serde_json::json!([0, 3])));
    assert!(lines.iter().any(|v| v == &serde_json::json!([0, 1, 2, 3])));
}

#[test]
fn two_point_lattice_diagram() {
    let out = stdout(&toposcope(&["enumerate", "--n", "2", "--format", "dot"]));
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches("[label=").count(), 4);
    // indiscrete below both Sierpiński spaces, both below discrete
    for edge in ["v0 -> v1;", "v0 -> v2;", "v1 -> v3;", "v2 -> v3;"] {
        assert!(out.contains(edge), "{edge}");
    }
    assert_eq!(toposcope(&["enumerate", "--n", "4", "--format", "dot"]).status.code(), Some(2));
}

#[test]
fn show_one_topology() {
    let out = stdout(&toposcope(&["show", "--n", "2", "--opens", "0,1,3"]));
    assert!(out.contains("properties:   t0 td sober"));
    let dot = stdout(&toposcope(&["show", "--n", "2", "--opens", "0,1,3", "--format", "dot"]));
    assert!(dot.contains("v0 -> v1;") || dot.contains("v1 -> v0;"));
    assert_eq!(toposcope(&["show", "--n", "2", "--opens", "1"]).status.code(), Some(2));
}
