use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stablegraph"))
        .args(args)
        .env_remove("STABLEGRAPH_CEILING")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("stablegraph-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn enumerate_counts_classes() {
    assert_eq!(
        json(&run(&["enumerate", "--h", "0", "--n", "4", "--beta", "0"]))["count"],
        4
    );
    assert_eq!(
        json(&run(&["enumerate", "--h", "0", "--n", "5"]))["count"],
        26
    );
}

#[test]
fn independence_of_a_loop() {
    let path = temp_file(
        "loop.json",
        r#"{"half_edges":[0,1],"involution":[[0,1]],"vertices":[[0,1]]}"#,
    );
    let v = json(&run(&["independence", "--graph", path.to_str().unwrap()]));
    assert_eq!(v["i_invariant"], 1);
    assert_eq!(v["tutte01"], 1);
}

#[test]
fn generating_function_and_height_trace() {
    let v = json(&run(&["gf", "projective", "--d", "2", "--terms", "5"]));
    assert_eq!(v["series"], serde_json::json!(["0", "0", "2", "6", "14"]));
    let v = json(&run(&["height-trace", "--expr", "conv(shift(P3,2),P1)"]));
    assert_eq!(v["certificate"]["bound"], 4);
    let path = temp_file("seq.json", "[0,0,2,6,14,30,62,126,254,510,1022,2046,4094]");
    let v = json(&run(&[
        "gf",
        "fit",
        "--file",
        path.to_str().unwrap(),
        "--C",
        "2",
    ]));
    assert_eq!(v["gf"], "(2t^2)/((1-t)(1-2t))");
}

#[test]
fn dot_output_for_posets() {
    let out = run(&["poset", "--h", "0", "--n", "5", "--q", "--format", "dot"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("digraph"));
}

#[test]
fn exit_codes_separate_usage_ceiling_and_success() {
    assert_eq!(
        run(&["enumerate", "--h", "x", "--n", "1"]).status.code(),
        Some(2)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_stablegraph"))
        .args(["enumerate", "--h", "1", "--n", "4"])
        .env("STABLEGRAPH_CEILING", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["verify-all", "--suite", "poincare"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}
