use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer-cover"))
        .args(args)
        .env("BRAUER_COVER_SEED", "11")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

#[test]
fn validate_fixture_succeeds() {
    let out = run(&["validate", "FIX1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["valid"], true);
}

#[test]
fn validate_reports_every_violation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{"half_edges":["x","y","z"],"sigma":{"x":"x","y":"y","z":"z"},"tau":{"x":"y","y":"x","z":"z"},"multiplicity":{}}"#,
    )
    .unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr_json(&out);
    assert_eq!(err["error"], "InvalidBrauer");
    assert!(err["witness"].as_array().unwrap().len() >= 2);
}

#[test]
fn malformed_json_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(&path, "{\"half_edges\": [").unwrap();
    let out = run(&["graph", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], "Malformed");
    let out = run(&["graph", "NO-SUCH-THING"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn delete_multiplicity_applies_to_twelve_half_edges() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bw.json");
    let out = run(&["delete", "multiplicity", "FIX-MULT", "--apply", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["plan"]["weight"]["values"]["1+"], "a^3");
    assert_eq!(report["plan"]["weight"]["values"]["1-"], "a^2");
    assert_eq!(report["plan"]["group"]["abelian"][0]["order"], 6);
    let bw: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(bw["half_edges"].as_array().unwrap().len(), 12);
    // The written covering is itself a valid input.
    let again = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(stdout_json(&again)["vertices"], 5);
}

#[test]
fn check_covering_passes_on_s3() {
    let out = run(&["check-covering", "FIX-S3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["theorem"]["mismatches"].as_array().unwrap().len(), 0);
    assert_eq!(v["covering"]["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn check_covering_on_windows() {
    for id in ["FIX-CYCLE", "FIX-BR1"] {
        let out = run(&["check-covering", id]);
        assert_eq!(out.status.code(), Some(0), "{id}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn smash_refuses_inadmissible_weight() {
    let out = run(&["smash", "FIX1", "--weight", "FIX-CYCLE"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr_json(&out);
    assert_eq!(err["error"], "NotAdmissible");
    assert!(err["witness"].is_string());
}

#[test]
fn infinite_group_needs_depth() {
    let dir = tempfile::tempdir().unwrap();
    let b = dir.path().join("triangle.json");
    let show = run(&["fixtures", "show", "FIX-CYCLE"]);
    let fixture: Value = serde_json::from_slice(&show.stdout).unwrap();
    fs::write(&b, fixture["brauer"].to_string()).unwrap();
    let out = run(&["smash", b.to_str().unwrap(), "--weight", "FIX-CYCLE"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"], "WindowRequired");
    let out = run(&["smash", b.to_str().unwrap(), "--weight", "FIX-CYCLE", "--depth", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let w = stdout_json(&out);
    assert_eq!(w["frontier"].as_array().unwrap().len(), 2);
}

#[test]
fn smash_quiver_window_from_flag() {
    let out = run(&["smash-quiver", "FIX-BR1", "--window", "a^-1,1,a"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["quiver"]["vertices"].as_array().unwrap().len(), 9);
    assert_eq!(v["quiver"]["arrows"].as_array().unwrap().len(), 10);
    assert_eq!(v["boundary"].as_array().unwrap().len(), 2);
    let out = run(&["smash-quiver", "FIX-BR1", "--window", "1,b"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"], "UnknownGenerator");
}

#[test]
fn graph_and_quiver_dot_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.dot");
    let q = dir.path().join("q.dot");
    let r = dir.path().join("r.txt");
    assert!(run(&["graph", "FIX1", "--dot", g.to_str().unwrap()]).status.success());
    let text = fs::read_to_string(&g).unwrap();
    assert!(text.contains("v0 -- v0"));
    assert!(text.contains("(2)\""));
    let out = run(&["quiver", "FIX1", "--dot", q.to_str().unwrap(), "--relations", r.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(fs::read_to_string(&q).unwrap().starts_with("digraph"));
    assert_eq!(fs::read_to_string(&r).unwrap().lines().count(), 6);
    assert_eq!(stdout_json(&out)["arrows"].as_array().unwrap().len(), 4);
}

#[test]
fn dot_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.dot");
    let b = dir.path().join("b.dot");
    run(&["smash", "FIX-CYCLE", "--dot", a.to_str().unwrap()]);
    run(&["smash", "FIX-CYCLE", "--dot", b.to_str().unwrap()]);
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert_eq!(text.matches("style=dashed").count(), 2);
}

#[test]
fn delete_kinds_and_errors() {
    let out = run(&["delete", "loops", "FIX-LOOP", "--apply"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["verification"]["edges"], 6);
    let out = run(&["delete", "multiedges-tree", "FIX1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"], "HasLoops");
    let out = run(&["delete", "cycles", "FIX-CYCLE", "--apply", "--depth", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["delete", "sideways", "FIX1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn iso_modes() {
    let out = run(&["iso", "FIX1", "FIX-S3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["iso", "FIX1", "FIX-MULT", "--mode", "graph"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"], "NotIsomorphic");
}

#[test]
fn fixtures_list_and_show() {
    let out = run(&["fixtures", "list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().any(|l| l.starts_with("FIX-BR1\t")));
    let out = run(&["fixtures", "show", "FIX-S3"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["id"], "FIX-S3");
    assert_eq!(run(&["fixtures", "show", "NOPE"]).status.code(), Some(2));
}

#[test]
fn random_is_seeded() {
    let a = run(&["random", "--admissible"]);
    let b = run(&["random", "--admissible"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["random", "--admissible", "--seed", "12"]);
    assert_ne!(a.stdout, c.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v["brauer"]["half_edges"].as_array().unwrap().len() <= 8);
}
