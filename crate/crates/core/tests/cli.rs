use std::fs;
use std::process::{Command, Output};

use tempfile::TempDir;
use tripack::graph::Graph;
use tripack::symmetrize::{verify_trace, SymmetrizationTrace};

fn tripack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tripack")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, contents: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, contents).unwrap();
    p.to_str().unwrap().to_string()
}

const OCTAHEDRON: &str = "# octahedron\n6 12\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 4\n2 5\n3 4\n3 5\n";

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('\t')))
        .unwrap_or_else(|| panic!("no `{key}` line in:\n{text}"))
}

#[test]
fn verify_octahedron() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "oct.txt", OCTAHEDRON);
    let o = tripack(&["verify", &f, "--oracle", "--claims"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(field(&s, "4k"), "12");
    assert_eq!(field(&s, "ceil(k)"), "3");
    assert_eq!(field(&s, "packing"), "4");
    assert_eq!(field(&s, "theorem2"), "PASS");
    assert_eq!(field(&s, "oracle"), "4");
    assert_eq!(field(&s, "claim9"), "PASS");
    assert_eq!(field(&s, "conjecture8"), "holds");

    let o = tripack(&["verify", &f, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["k4"], 12);
    assert_eq!(v["packing_size"], 4);
    assert_eq!(v["theorem2"], true);
}

#[test]
fn gen_turan_edge_list() {
    let o = tripack(&["gen", "turan2", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("# family=turan2"));
    let g = tripack::edgelist::parse_edge_list(&s).unwrap();
    assert_eq!(g, tripack::generators::turan2(5).unwrap());
    assert_eq!(g.edge_count(), 6);
}

#[test]
fn gen_random_is_seeded_and_readable() {
    let a = tripack(&["gen", "random", "14", "--seed", "11", "--edge-prob", "0.7", "--format", "graph6"]);
    let b = tripack(&["gen", "random", "14", "--seed", "11", "--edge-prob", "0.7", "--format", "graph6"]);
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(s.lines().next().unwrap().contains("seed=11 rng=ChaCha8Rng"));
    let g = tripack::cli::parse_graph_text(&s, None).unwrap();
    assert_eq!(g, tripack::generators::random_k4_free(14, 0.7, 11).unwrap());
}

#[test]
fn symmetrize_triangle_and_replay() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k3.g6", "Bw\n");
    let trace = dir.path().join("trace.json");
    let o = tripack(&["symmetrize", &f, "--trace", trace.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    assert_eq!(field(&s, "outcome"), "stopped_single_part");
    assert_eq!(field(&s, "rounds"), "0");
    assert_eq!(field(&s, "f(G0,P0)"), "-0.25");

    let text = fs::read_to_string(&trace).unwrap();
    let tr = SymmetrizationTrace::from_json(&text).unwrap();
    let k3 = Graph::complete(3).unwrap();
    assert!(verify_trace(&tr, &k3, &tr.initial_partition).is_ok());
    let o = tripack(&["symmetrize", &f, "--replay", trace.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn tampered_trace_fails_with_exit_1() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "oct.txt", OCTAHEDRON);
    let trace = dir.path().join("t.json");
    let o = tripack(&["symmetrize", &f, "--trace", trace.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&trace).unwrap()).unwrap();
    let f4 = v["initial"]["f4"].as_i64().unwrap();
    v["initial"]["f4"] = (f4 - 4).into();
    fs::write(&trace, v.to_string()).unwrap();
    let o = tripack(&["symmetrize", &f, "--replay", trace.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("step 0"));
}

#[test]
fn custom_partition_for_c5() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let p = write(&dir, "p.json", "[[4],[0,1],[2,3]]");
    let o = tripack(&["symmetrize", &f, "--partition", &p, "--initial-check", "after-first-round"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(field(&s, "outcome"), "stopped_negative_k");
    assert_eq!(field(&s, "rounds"), "1");
    assert_eq!(field(&s, "f(G0,P0)"), "-3.75");

    let bad = write(&dir, "bad.json", "[[0],[1],[2],[3],[4]]");
    assert_eq!(tripack(&["verify", &f, "--partition", &bad]).status.code(), Some(2));
}

#[test]
fn extract_writes_packing() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "oct.txt", OCTAHEDRON);
    let out = dir.path().join("pk.json");
    let o = tripack(&["extract", &f, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["size"], 4);
    assert_eq!(v["bound"], 4);
    assert_eq!(v["triangles"].as_array().unwrap().len(), 4);
}

#[test]
fn oracle_prints_exact_value() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "oct.txt", OCTAHEDRON);
    let o = tripack(&["oracle", &f, "--partitions"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("4"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn explore_reports_are_json_and_deterministic() {
    let o = tripack(&["explore", "--n", "4", "--checks", "theorem2,conjecture8"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["graphs"], 64);
    assert_eq!(v["checks"]["theorem2"]["failed"], 0);
    assert!(v["checks"].get("lemma3").is_none());

    let args = ["explore", "--n", "15", "--mode", "random", "--count", "40", "--seed", "3", "--checks", "theorem2,lemma3"];
    let a = tripack(&args);
    let b = tripack(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn explore_writes_rows() {
    let dir = TempDir::new().unwrap();
    let rows = dir.path().join("rows.tsv");
    let o = tripack(&["explore", "--n", "3", "--checks", "theorem2", "--rows", rows.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&rows).unwrap();
    assert!(text.starts_with("n\te\tt\tr\t4k\t4f\t4g\tpacking_size\toracle_max\n"));
    assert_eq!(text.lines().count(), 1 + 8);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(tripack(&["verify", "/definitely/not/here"]).status.code(), Some(2));
    let junk = write(&dir, "junk.txt", "3 2\n0 1\n");
    assert_eq!(tripack(&["verify", &junk]).status.code(), Some(2));
    assert_eq!(tripack(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(tripack(&["explore", "--n", "4", "--checks", "theorem3"]).status.code(), Some(2));
    assert_eq!(tripack(&["explore", "--n", "8"]).status.code(), Some(3));
    let k9 = write(&dir, "k9.g6", "H~~~~~~\n");
    assert_eq!(tripack(&["oracle", &k9]).status.code(), Some(3));
    assert_eq!(tripack(&["gen", "multipartite", "40", "40"]).status.code(), Some(3));
    assert_eq!(tripack(&["--help"]).status.code(), Some(0));
}

#[test]
fn stdin_input() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_tripack"))
        .args(["oracle", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b">>graph6<<Bw\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o).trim(), "1");
}
