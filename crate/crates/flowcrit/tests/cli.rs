//! The `flowcrit` binary end to end.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

use flowcrit::generate::read_jsonl;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flowcrit")).args(args).output().expect("binary runs")
}

fn scratch(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = scratch(dir, name);
    std::fs::write(&p, text).unwrap();
    path_str(&p)
}

fn path_str(p: &Path) -> String {
    p.to_string_lossy().into_owned()
}

const K4: &str = "vertices 4\nedge 0 1\nedge 0 2\nedge 0 3\nedge 1 2\nedge 1 3\nedge 2 3\n";

const MATCHING: &str = "# matching plus a double-joined tip
vertices 5
tip 4
edge 0 1
edge 2 3
edge 0 4 2
edge 1 4 2
edge 2 4 2
edge 3 4 2
";

#[test]
fn solve_k4_with_zero_boundary_prints_none() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&["solve", &write(&dir, "k4.txt", K4)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "none");
}

#[test]
fn solve_prints_a_flow_when_one_exists() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "k4b.txt", &format!("{K4}boundary 1 1 1 0\n"));
    let out = bin(&["solve", &f]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.is_array() || v.is_object());
}

#[test]
fn critical_on_matching_canvas_is_true() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&["critical", &write(&dir, "matching.txt", MATCHING)]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], true);
}

#[test]
fn generate_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = scratch(&dir, "g6.jsonl");
    let c = path_str(&corpus);
    let out = bin(&["generate", "--k", "6", "--max-n", "6", "--out", &c]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let entries = read_jsonl(std::io::BufReader::new(std::fs::File::open(&corpus).unwrap())).unwrap();
    assert_eq!(entries.len(), 30);
    for claim in ["cor-censmax", "thm-deg", "obs-sumdeg"] {
        let out = bin(&["verify", "--claim", claim, "--corpus", &c]);
        assert_eq!(out.status.code(), Some(0), "{claim}");
    }
    // conjecture sweeps report but exit 0
    let out = bin(&["verify", "--claim", "conj-fewlarge", "--corpus", &c]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["conjecture"], true);
}

#[test]
fn easel_generation_and_density() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = scratch(&dir, "g70.jsonl");
    let c = path_str(&corpus);
    let out = bin(&["generate", "--k", "7", "--easel", "--r", "0", "--max-n", "5", "--out", &c]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = bin(&["verify", "--claim", "lemma-degbetter", "--corpus", &c]);
    assert_eq!(out.status.code(), Some(0));
    let out = bin(&["verify", "--claim", "density", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn to_tame_on_k4() {
    let dir = tempfile::tempdir().unwrap();
    let canvas = scratch(&dir, "k4-tame.txt");
    let out = bin(&["to-tame", &write(&dir, "k4t.txt", K4), "--out", &path_str(&canvas)]);
    assert_eq!(out.status.code(), Some(0));
    let g = flowcrit::graph::parse_graph_file(&std::fs::read_to_string(&canvas).unwrap()).unwrap();
    let c = g.canvas().unwrap();
    assert_eq!(c.tip_degree(), 8);
    assert!(c.is_tame());
}

#[test]
fn malformed_input_exits_2_with_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "bad.txt", "vertices 3\nedge 0 1\nedge 0 x\n");
    let out = bin(&["solve", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn unknown_claim_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&["verify", "--claim", "no-such-claim", "--corpus", &write(&dir, "empty.jsonl", "")]);
    assert_eq!(out.status.code(), Some(2));
}
