use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn inj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inj")).args(args).output().expect("run inj")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn solve_cycle_json() {
    let out = inj(&["solve", "cycle-5", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["index_or_bound"], 3);
    assert_eq!(v["graph"]["m"], 5);
    assert_eq!(v["valid"], true);
    let text = String::from_utf8_lossy(&out.stdout);
    let keys = ["\"graph\"", "\"method\"", "\"index_or_bound\"", "\"colors\"", "\"valid\"", "\"certificates\""];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|p| p[0] < p[1]));
}

#[test]
fn solve_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = inj(&["solve", "petersen", "--json"]);
    let coloring = write(dir.path(), "c.json", &String::from_utf8_lossy(&out.stdout));
    let check = inj(&["verify", "petersen", "--coloring", &coloring]);
    assert!(check.status.success());
    assert_eq!(json(&check)["valid"], true);
}

#[test]
fn verify_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let c = write(dir.path(), "c.txt", "1 2 1\n");
    let out = inj(&["verify", &g, "--coloring", &c]);
    assert!(out.status.success(), "an invalid coloring is still a result");
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["witness"]["kind"], "same_color_conflict");
    assert_eq!(v["witness"]["e"], 0);
    assert_eq!(v["witness"]["f"], 2);
}

#[test]
fn formats_by_extension() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = write(dir.path(), "c5.g6", "Dhc\n");
    let col = write(dir.path(), "c5.col", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    for path in [&g6, &col] {
        let out = inj(&["solve", path, "--json"]);
        assert_eq!(json(&out)["index_or_bound"], 3);
    }
    let forced = inj(&["solve", &g6, "--format", "edgelist"]);
    assert_eq!(forced.status.code(), Some(3));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(inj(&["solve"]).status.code(), Some(2));
    assert_eq!(inj(&["solve", "k4", "--bogus"]).status.code(), Some(2));
    assert_eq!(inj(&["solve", "no-such-graph"]).status.code(), Some(2));
    let bad = write(dir.path(), "bad.col", "p edge 2 1\ne 0 1\n");
    assert_eq!(inj(&["solve", &bad]).status.code(), Some(3));
    assert_eq!(inj(&["bound", "k4", "--method", "mad73"]).status.code(), Some(4));
    assert_eq!(inj(&["bound", "cycle-5", "--method", "bipartite"]).status.code(), Some(4));
    assert_eq!(inj(&["bound", "k4", "--method", "mad73", "--trust-mad"]).status.code(), Some(4));
}

#[test]
fn bound_methods() {
    let out = inj(&["bound", "sun", "--method", "mad73", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["index_or_bound"], 4);
    let colors: Vec<u64> = v["colors"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).collect();
    let k = *colors.iter().max().unwrap();
    assert!(k <= 4 && (1..=k).all(|c| colors.contains(&c)), "dense 1-based colors");
    let tsv = inj(&["bound", "outerplanar-twin", "--method", "outerplanar", "--tsv"]);
    assert_eq!(String::from_utf8_lossy(&tsv.stdout).lines().count(), 17);
}

#[test]
fn mad_json() {
    let out = inj(&["mad", "sun"]);
    assert_eq!(json(&out), serde_json::json!({ "mad": { "num": 2, "den": 1 } }));
}

#[test]
fn transform_both_ways() {
    let dir = tempfile::tempdir().unwrap();
    let out = inj(&["solve", "heawood", "--json"]);
    let c = write(dir.path(), "c.json", &String::from_utf8_lossy(&out.stdout));
    let star = inj(&["transform", "heawood", "--coloring", &c, "--to", "star"]);
    assert!(star.status.success());
    let v = json(&star);
    assert_eq!(v["valid"], true);
    let colors = serde_json::to_string(&v["colors"]).unwrap();
    let vc = write(dir.path(), "vc.json", &colors);
    let back = inj(&["transform", "heawood", "--coloring", &vc, "--to", "injective"]);
    assert!(back.status.success());
    assert_eq!(json(&back)["valid"], true);
}

#[test]
fn corpus_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert!(inj(&["corpus", "--export", d]).status.success());
    let g6 = dir.path().join("bipartite-cubic.g6");
    let txt = dir.path().join("bipartite-cubic.txt");
    for p in [g6, txt] {
        let out = inj(&["solve", p.to_str().unwrap(), "--json"]);
        assert_eq!(json(&out)["index_or_bound"], 5);
    }
    let listing = inj(&["corpus"]);
    assert!(String::from_utf8_lossy(&listing.stdout).contains("heawood"));
}

#[test]
fn probe_is_deterministic() {
    let a = inj(&["probe", "subcubic", "--max-n", "6", "--count", "30", "--seed", "5"]);
    let b = inj(&["probe", "subcubic", "--max-n", "6", "--count", "30", "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["max_index"], 6);
    assert_eq!(v["above_ceiling"].as_array().unwrap().len(), 0);
}
