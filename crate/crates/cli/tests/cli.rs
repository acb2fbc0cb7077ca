use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn domdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domdim"))
        .current_dir(corpus())
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = domdim(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}\n{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (v, out.status.code().unwrap())
}

#[test]
fn analyze_dual_numbers() {
    let (v, code) = json(&["analyze", "kx2.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["self_injective"], true);
    assert_eq!(v["result"]["dominant_dimension"]["kind"], "infinite");
    assert_eq!(v["result"]["dominant_dimension"]["certificate"]["kind"], "self_injective");
    assert_eq!(v["header"]["cutoff"], 20);
    assert_eq!(v["header"]["seed"], 0);
    assert_eq!(v["header"]["field"], "Q");
}

#[test]
fn analyze_a2_quiver() {
    let (v, _) = json(&["analyze", "a2.qv"]);
    assert_eq!(v["result"]["dominant_dimension"], serde_json::json!({"kind": "finite", "value": 1}));
    assert_eq!(v["result"]["frobenius_part"]["dim"], 0);
}

#[test]
fn analyze_morita_algebra() {
    let (v, _) = json(&["analyze", "morita_b.json"]);
    assert_eq!(v["result"]["dominant_dimension"]["value"], 1);
    assert_eq!(v["result"]["frobenius_part"]["dim"], 2);
    assert_eq!(v["result"]["frobenius_part"]["matches"][0]["algebra"], "kx2");
}

#[test]
fn header_echoes_flags() {
    let (v, _) = json(&["--cutoff", "7", "--seed", "3", "--field", "5", "analyze", "named:a2"]);
    assert_eq!(v["header"]["cutoff"], 7);
    assert_eq!(v["header"]["seed"], 3);
    assert_eq!(v["header"]["field"], "F5");
    assert_eq!(v["result"]["dominant_dimension"]["value"], 1);
}

#[test]
fn muller_and_theorem_checks() {
    let (v, code) = json(&["check", "muller", "kx2.json", "a2.qv"]);
    assert_eq!((code, v["result"]["status"].as_str()), (0, Some("pass")));
    let (v, code) = json(&["check", "thm12", "morita_ext.json"]);
    assert_eq!((code, v["result"]["status"].as_str()), (0, Some("pass")));
}

#[test]
fn corner_reports_the_chain() {
    let (v, code) = json(&["check", "corner", "a2.qv", "--e=e1"]);
    assert_eq!(code, 3);
    for key in ["dm_a", "dm_corner", "dm_ae"] {
        assert!(v["result"]["chain"][key].is_object(), "{key}");
    }
    let (v, code) = json(&["check", "corner", "a2kx2.qv", "--e", "e3"]);
    assert_eq!((code, v["result"]["status"].as_str()), (0, Some("pass")));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"field\": \"Q\", \"dim\": 1,").unwrap();
    assert_eq!(domdim(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));
    let assoc = dir.path().join("assoc.json");
    std::fs::write(&assoc, r#"{"field": "Q", "dim": 2, "structure": [[[1,0],[0,1]],[[0,1],[1,0]]], "unit": [0, 1]}"#).unwrap();
    assert_eq!(domdim(&["analyze", assoc.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(domdim(&["analyze", "named:nope"]).status.code(), Some(2));
    assert_eq!(domdim(&["check", "nope", "a2.qv"]).status.code(), Some(2));
    assert_eq!(domdim(&["check", "thm12", "regular(a2.qv)"]).status.code(), Some(0));
    assert_eq!(domdim(&["check", "markov", "named:k", "kx2.json", "--form", "[1,1]", "--trace", "[1]"]).status.code(), Some(3));
    assert_eq!(domdim(&["check", "thm11", "aus.qv"]).status.code(), Some(0));
}

#[test]
fn hypothesis_failure_from_the_engine() {
    // the ground field inside the quiver algebra A2 is not Frobenius
    let dir = tempfile::tempdir().unwrap();
    let ext = dir.path().join("k_in_a2.json");
    std::fs::write(
        &ext,
        format!(r#"{{"small": "named:k", "big": "{}", "embedding": [[1], [1], [0]]}}"#, corpus().join("a2.qv").display()),
    )
    .unwrap();
    let out = domdim(&["--json", "check", "thm12", ext.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["outcome"], "hypothesis_failed");
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        &["--json", "analyze", "morita_b.json"][..],
        &["--json", "--seed", "9", "check", "facts", "tensor-ext(a2.qv, kx2.json)", "--samples", "3", "--max-dim", "6"],
        &["dump-resolution", "aus.qv"],
    ] {
        let a = domdim(args);
        let b = domdim(args);
        assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn construct_round_trips() {
    let out = domdim(&["--json", "construct", "tensor(a2.qv, kx2.json)"]);
    assert!(out.status.success());
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.json");
    std::fs::write(&file, &out.stdout).unwrap();
    let again = domdim(&["--json", "construct", file.to_str().unwrap()]);
    assert_eq!(out.stdout, again.stdout);
    let (v, _) = json(&["analyze", file.to_str().unwrap()]);
    assert_eq!(v["result"]["dim"], 6);
    assert_eq!(v["result"]["dominant_dimension"]["value"], 1);

    let out = domdim(&["--json", "construct", "tensor-ext(a2.qv, kx2.json)"]);
    let file = dir.path().join("e.json");
    std::fs::write(&file, &out.stdout).unwrap();
    let (v, code) = json(&["check", "frobenius", file.to_str().unwrap()]);
    assert_eq!((code, &v["result"]["frobenius"]), (0, &Value::Bool(true)));
    let out = domdim(&["--json", "construct", "corner-bimodule(a2.qv, 1)"]);
    let file = dir.path().join("m.json");
    std::fs::write(&file, &out.stdout).unwrap();
    let (v, _) = json(&["check", "frobenius", file.to_str().unwrap()]);
    assert_eq!(v["result"]["kind"], "bimodule");
}

#[test]
fn corpus_runs_clean() {
    let out = domdim(&["--json", "corpus"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{v:#}");
    assert_eq!(v["failed"], 0);
    assert!(v["total"].as_u64().unwrap() >= 80);
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn corpus_filters() {
    let (v, code) = json(&["corpus", "--filter", "paper"]);
    assert_eq!(code, 0);
    assert!(v["total"].as_u64().unwrap() > 0);
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["provenance"] == "paper"));
    let (v, code) = json(&["corpus", "--filter", "nonexistent"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 0);
}

#[test]
fn corpus_mismatch_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(corpus().join("a2.qv"), dir.path().join("a2.qv")).unwrap();
    std::fs::write(
        dir.path().join("corpus.json"),
        r#"[{"name": "wrong", "command": "analyze", "inputs": ["a2.qv"],
             "expected": {"result.dominant_dimension.value": 2}, "provenance": "derived"}]"#,
    )
    .unwrap();
    let out = domdim(&["corpus", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}
