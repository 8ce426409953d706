use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn write(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("coopgame-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coopgame")).args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

const GLOVE: &str = r#"{"n": 3, "values": ["0", "0", "0", "1", "0", "1", "0", "1"]}"#;
const IG: &str = r#"{"n": 3, "singletons": ["0", "0", "0"], "grand": "1"}"#;

#[test]
fn classify_and_solve() {
    let g = write("glove.json", GLOVE);
    let g = g.to_str().unwrap();
    let report = stdout_json(&run(&["classify", g]));
    assert_eq!(report["report"]["convex"], false);
    assert_eq!(report["report"]["superadditive"], true);
    let phi = stdout_json(&run(&["solve", g, "--concept", "shapley"]));
    assert_eq!(phi["result"]["value"], serde_json::json!(["2/3", "1/6", "1/6"]));
    let eta = stdout_json(&run(&["--float", "solve", g, "--concept", "nucleolus"]));
    assert_eq!(eta["result"]["value"], serde_json::json!(["1", "0", "0"]));
}

#[test]
fn kernel_needs_a_point() {
    let g = write("glove2.json", GLOVE);
    let out = run(&["solve", g.to_str().unwrap(), "--concept", "kernel"]);
    assert_eq!(out.status.code(), Some(1));
    let p = write("point.json", r#"["1", "0", "0"]"#);
    let member = stdout_json(&run(&["solve", g.to_str().unwrap(), "--concept", "kernel", "--check-point", p.to_str().unwrap()]));
    assert_eq!(member["member"], true);
}

#[test]
fn incomplete_game_commands() {
    let ig = write("ig.json", IG);
    let ig = ig.to_str().unwrap();
    let ext = stdout_json(&run(&["extend", ig, "--class", "C1", "--list-extremes"]));
    assert_eq!(ext["extremes"].as_array().unwrap().len(), 3);
    assert_eq!(ext["rays"].as_array().unwrap().len(), 0);
    let strong = stdout_json(&run(&["approx", ig, "--class", "C", "--concept", "shapley", "--mode", "strong"]));
    assert_eq!(strong["solution"]["kind"], "empty");
    assert_eq!(strong["solution"]["verified"], true);
    let w = stdout_json(&run(&["witness", ig, "--type", "strong-core-empty"]));
    assert_eq!(w["verified"], true);
    let out = run(&["witness", ig, "--type", "unbounded-shapley"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_is_rejected() {
    let bad = write("bad.json", r#"{"n": 2, "values": ["1", "0", "0", "1"]}"#);
    let out = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].is_string());
}
