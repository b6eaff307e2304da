use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use cactus_tools::ConditionReport;

fn cactus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cactus")).args(args).output().unwrap()
}

fn cactus_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cactus"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn gen_then_analyze_via_stdin() {
    let gen = cactus(&["gen", "cactus", "--seed", "3", "--t", "3"]);
    assert!(gen.status.success());
    let out = cactus_stdin(&["analyze", "-"], &stdout(&gen));
    assert_eq!(out.status.code(), Some(0));
    let r: ConditionReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(r.conditions.values().all(|c| c.value() == Some(true)));
}

#[test]
fn analyze_a_file() {
    let dir = scratch("analyze_a_file");
    let path = dir.join("d4.graph");
    std::fs::write(&path, "digraph\n2 4\n0 1\n0 1\n1 0\n1 0\n").unwrap();
    let out = cactus(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r: ConditionReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(r.condition("c4"), Some(false));
}

#[test]
fn input_errors_exit_2() {
    let out = cactus_stdin(&["analyze", "-"], "digraph\n1 1\n0 0\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(cactus(&["analyze", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(cactus(&["analyze", "--fixture", "NOPE"]).status.code(), Some(2));
    assert_eq!(cactus(&["euler", "--count-only", "-"]).status.code(), Some(2));
}

#[test]
fn loops_flag() {
    let text = "digraph\n1 1\n0 0\n";
    let out = cactus_stdin(&["euler", "--count-only", "--loops", "-"], text);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn budget_configuration_errors_exit_3() {
    for flag in ["--max-cycles", "--max-partitions", "--max-circuits"] {
        let out = cactus(&["analyze", "--fixture", "C3", flag, "0"]);
        assert_eq!(out.status.code(), Some(3), "{flag}");
    }
    let out = cactus(&["analyze", "--fixture", "C3", "--max-lattice-edges", "99"]);
    assert_eq!(out.status.code(), Some(3));
    let out = cactus(&["euler", "--fixture", "D4", "--enumerate", "--cap", "0"]);
    assert_eq!(out.status.code(), Some(3));
    let out = cactus(&["euler", "--fixture", "D4", "--enumerate", "--cap", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget of 1 exceeded"));
}

#[test]
fn euler_modes() {
    assert_eq!(stdout(&cactus(&["euler", "--fixture", "D2", "--count-only"])), "2\n");
    let listed = stdout(&cactus(&["euler", "--fixture", "D4", "--enumerate"]));
    assert_eq!(listed.lines().count(), 2);
    let one = stdout(&cactus(&["euler", "--fixture", "FIG8"]));
    assert_eq!(one.trim().split(',').count(), 6);
    let pair: serde_json::Value = serde_json::from_str(&stdout(&cactus(&["euler", "--fixture", "D4", "--interlace"]))).unwrap();
    assert!(pair["pair"].is_object());
    let db: serde_json::Value = serde_json::from_str(&stdout(&cactus(&["euler", "--debruijn", "3"]))).unwrap();
    assert_eq!(db["circuit_count"], "16");
    assert_ne!(db["pair"]["a"], db["pair"]["b"]);
}

#[test]
fn partitions_and_lattice() {
    let p: serde_json::Value = serde_json::from_str(&stdout(&cactus(&["partitions", "--fixture", "D4"]))).unwrap();
    assert_eq!(p["count"], 2);
    let l: serde_json::Value = serde_json::from_str(&stdout(&cactus(&["lattice", "--fixture", "D4"]))).unwrap();
    assert_eq!(l["elements"].as_array().unwrap().len(), 3);
    assert_eq!(l["minimal"].as_array().unwrap().len(), 2);
    assert_eq!(l["is_lattice"], false);
}

#[test]
fn dot_export() {
    let out = stdout(&cactus(&["dot", "--fixture", "C3"]));
    assert!(out.starts_with("digraph G {"));
    assert!(out.contains("2 -> 0 [label=\"e2\"];"));
}

#[test]
fn batch_over_a_directory() {
    let dir = scratch("batch_over_a_directory");
    std::fs::write(dir.join("cactus-a.graph"), "digraph\n3 3\n0 1\n1 2\n2 0\n").unwrap();
    std::fs::write(dir.join("dd-b.graph"), "digraph\n2 4\n0 1\n0 1\n1 0\n1 0\n").unwrap();
    std::fs::write(dir.join("notes.md"), "ignored").unwrap();
    let out = cactus(&["batch", "--dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("cactus: 1 instances, 1 in S"), "{text}");
    assert!(text.contains("dd: 1 instances, 0 in S, 1 not in S"), "{text}");

    std::fs::write(dir.join("zz-bad.graph"), "digraph\n2\n").unwrap();
    let out = cactus(&["batch", "--dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zz-bad.graph"));
}

#[test]
fn generated_batch_is_ordered_and_agrees() {
    let args = ["batch", "--family", "random", "--family", "christmas", "--count", "20", "--json"];
    let a = cactus(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&cactus(&args)));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), 40);
    assert_eq!(names[0], "random-0");
    assert_eq!(names[20], "christmas-0");
}
