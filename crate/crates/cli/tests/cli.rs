use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_knotted-tori"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn trefoil() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/trefoil6.txt")
}

fn triangle(dir: &Path) -> PathBuf {
    let p = dir.join("triangle.txt");
    std::fs::write(&p, "0 0 0\n1 0 0\n0 1 0\n").unwrap();
    p
}

#[test]
fn generate_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("m5.txt");
    let g = run(&["generate", "minimal3k", "--k", "5", "--out", file.to_str().unwrap()]);
    assert!(g.status.success());
    let a = run(&["analyze", file.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    let r = json(&a);
    assert_eq!(r["type"], "3x5");
    assert_eq!(r["n"], 13);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["bound_satisfied"], true);
}

#[test]
fn census_of_seven_vertices() {
    let out = run(&["census", "--n", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let faces: Vec<[usize; 3]> = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(faces.len(), 14);
    let summary: Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(summary["count"], 1);
    assert_eq!(summary["by_type"]["3x3"], 1);
}

#[test]
fn theorem_check_at_three() {
    let out = run(&["census", "--verify-thm31", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["holds"], true);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["generate", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["census", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "minimal3k", "--k", "2"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/nonexistent/file"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3\n1 2 3\n").unwrap();
    assert_eq!(run(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn cyclic_realization_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.obj");
    let b = dir.path().join("b.obj");
    let ra = run(&["realize", "cyclic", "--k", "3", "--format", "obj", "--out", a.to_str().unwrap()]);
    let rb = run(&["realize", "cyclic", "--k", "3", "--format", "obj", "--out", b.to_str().unwrap()]);
    assert_eq!(ra.status.code(), Some(0));
    let r = json(&ra);
    assert_eq!(r["embedded"], true);
    assert_eq!(r["vertices"], 7);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let strip = |o: &Output| {
        let mut v = json(o);
        v.as_object_mut().unwrap().remove("mesh");
        v
    };
    assert_eq!(strip(&ra), strip(&rb));
}

#[test]
fn triangle_tube_and_oversized_radius() {
    let dir = tempfile::tempdir().unwrap();
    let knot = triangle(dir.path());
    let off = dir.path().join("t.off");
    let ok = run(&["realize", "tube", "--knot", knot.to_str().unwrap(), "--out", off.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    let r = json(&ok);
    assert_eq!(r["embedded"], true);
    assert_eq!(r["core"]["determinant"], 1);
    assert!(std::fs::read_to_string(&off).unwrap().starts_with("OFF\n9 18 0\n"));
    let big = run(&["realize", "tube", "--knot", knot.to_str().unwrap(), "--eps", "10", "--out", off.to_str().unwrap()]);
    assert_eq!(big.status.code(), Some(1));
}

#[test]
fn trefoil_determinant() {
    let out = run(&["knot", "det", "--knot", trefoil().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["determinant"], 3);
    assert_eq!(r["k"], 6);
}

#[test]
fn trefoil_tube_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let off = dir.path().join("trefoil.off");
    let out = run(&["realize", "tube", "--knot", trefoil().to_str().unwrap(), "--out", off.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["embedded"], true);
    assert_eq!(r["vertices"], 18);
    assert_eq!(r["knot"]["determinant"], 3);
    assert_eq!(r["core"]["determinant"], 3);
}
