use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn minorcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minorcat")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn homset_exit_codes() {
    let out = minorcat(&["homset", "C3", "*"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 3);
    assert_eq!(code(&minorcat(&["homset", "*", "C3"])), 1);
    assert_eq!(code(&minorcat(&["homset", "Q9", "*"])), 2);
}

#[test]
fn validate_and_compose() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    };
    let first = stdout(&minorcat(&["homset", "C3", "C2"])).lines().next().unwrap().to_string();
    let second = stdout(&minorcat(&["homset", "C2", "R1"])).lines().next().unwrap().to_string();
    let (f, g) = (write("f.json", &first), write("g.json", &second));
    let path = |p: &Path| p.to_str().unwrap().to_string();

    assert_eq!(code(&minorcat(&["validate", &path(&f)])), 0);
    let composed = minorcat(&["compose", &path(&f), &path(&g)]);
    assert_eq!(code(&composed), 0);
    let h: Value = serde_json::from_str(&stdout(&composed)).unwrap();
    assert_eq!(h["target"]["name"], "R1");
    assert_eq!(code(&minorcat(&["compose", &path(&g), &path(&f)])), 1);

    // break equivariance by sending one arrow of an edge somewhere else
    let mut broken: Value = serde_json::from_str(&first).unwrap();
    let map = broken["arrow_map"].as_object_mut().unwrap();
    let keys: Vec<String> = map.keys().cloned().collect();
    let other = map[&keys[1]].clone();
    map.insert(keys[0].clone(), if other == "*" { Value::from("v0") } else { Value::from("*") });
    let b = write("broken.json", &broken.to_string());
    let out = minorcat(&["validate", &path(&b)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("invalid"));

    let garbage = write("garbage.json", "{ not json");
    assert_eq!(code(&minorcat(&["validate", &path(&garbage)])), 2);
    assert_eq!(code(&minorcat(&["validate", "/nonexistent/morphism.json"])), 2);
}

#[test]
fn graph_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("theta.graph");
    std::fs::write(&p, "graph theta\nvertex a\nvertex b\nedge x a b\nedge y a b\nedge z a b\n").unwrap();
    let out = minorcat(&["homology", "--graph", p.to_str().unwrap(), "--imax", "1", "--nmax", "2", "--oracle"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("theta"));

    let bad = dir.path().join("bad.graph");
    std::fs::write(&bad, "vertex a\nedge e a q\n").unwrap();
    assert_eq!(code(&minorcat(&["homology", "--graph", bad.to_str().unwrap()])), 2);
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let run = |jobs: &str, name: &str| {
        let out = dir.path().join(name);
        let o = minorcat(&[
            "--jobs",
            jobs,
            "--out",
            out.to_str().unwrap(),
            "homology",
            "--max-edges",
            "3",
            "--imax",
            "2",
            "--nmax",
            "3",
            "--oracle",
        ]);
        assert_eq!(code(&o), 0);
        (o.stdout, std::fs::read(out).unwrap())
    };
    let serial = run("1", "serial.jsonl");
    let parallel = run("4", "parallel.jsonl");
    assert_eq!(serial, parallel);
    assert!(!serial.1.is_empty());
}

#[test]
fn torsion_audit_passes_on_small_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let repro = dir.path().join("repro.graph");
    let out = minorcat(&["torsion-audit", "--max-edges", "4", "--reproducer", repro.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(!repro.exists());

    let out = minorcat(&["torsion-audit", "--graph", "K3,3", "--graph", "K4", "--reproducer", repro.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("Z^4 + Z/2"));
}

#[test]
fn growth_check_and_generators() {
    let out = minorcat(&["growth-check", "--max-edges", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("i = 1, alpha = 18"));
    let out = minorcat(&["generators", "--imax", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("total: 5\n"));
}

#[test]
fn quartet_comparison() {
    let dir = tempfile::tempdir().unwrap();
    let quartet = |name: &str, m: u32| {
        let q = serde_json::json!({
            "d": { "vertices": 1, "arrows": [] },
            "d_prime": { "vertices": 2, "arrows": [[1, 0]] },
            "phi": { "vertex_map": [0, 0], "arrow_map": ["v0"] },
            "m": [m],
        });
        let p = dir.path().join(name);
        std::fs::write(&p, q.to_string()).unwrap();
        p.to_str().unwrap().to_string()
    };
    let (a, b) = (quartet("a.json", 1), quartet("b.json", 3));
    let out = minorcat(&["quartet", "compare", &a, &b]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out).trim(), r#"{"order":"LT"}"#);
    let out = minorcat(&["quartet", "leq", &a, &b]);
    assert_eq!(code(&out), 0);
    let w: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(w["n"], serde_json::json!([2]));
    assert_eq!(code(&minorcat(&["quartet", "leq", &b, &a])), 1);
}

#[test]
fn complex_rows() {
    let out = minorcat(&["complex", "--graph", "K3,3", "--imax", "1", "--nmax", "2"]);
    assert_eq!(code(&out), 0);
    let rows: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 1 + 2 * 3);
    let h12 = rows.iter().find(|r| r["i"] == 1 && r["n"] == 2).unwrap();
    assert_eq!(h12["homology"]["rank"], 4);
    assert_eq!(h12["homology"]["torsion"], serde_json::json!([2]));
}
