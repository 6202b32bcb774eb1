use std::fs;
use std::path::{Path, PathBuf};

use grundy::cli::{dispatch, AnalyzeReport, FamilyReport, IntervalReport, SolveReport, VerifyReport};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("grundy").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_tmp(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

/// parse(emit(x)) == x
fn round_trips<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(stdout: &str) -> T {
    let parsed: T = serde_json::from_str(stdout).unwrap();
    let again: T = serde_json::from_str(&serde_json::to_string(&parsed).unwrap()).unwrap();
    assert_eq!(parsed, again);
    parsed
}

#[test]
fn sierpinski_labels() {
    let (code, out, _) = run(&["sierpinski", "gen", "--p", "3", "--n", "2", "--method", "a"]);
    assert_eq!(code, 0);
    assert_eq!(out.split_whitespace().collect::<Vec<_>>(), ["00", "01", "02", "10", "12", "20"]);

    let (_, out, _) = run(&["sierpinski", "gen", "--p", "3", "--n", "2", "--method", "l"]);
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn sierpinski_graph_output_parses() {
    let (code, out, _) = run(&["sierpinski", "gen", "--p", "3", "--n", "3", "--emit", "graph"]);
    assert_eq!(code, 0);
    let g = grundy::io::parse_edge_list(&out).unwrap();
    assert_eq!(g.n(), 27);
}

#[test]
fn sierpinski_rejects_zero_dimension() {
    let (code, _, err) = run(&["sierpinski", "gen", "--p", "3", "--n", "0"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
}

#[test]
fn interval_solve_text_and_json() {
    let file = data("five.intervals");
    let (code, out, _) = run(&["interval", "solve", &file, "--witness"]);
    assert_eq!(code, 0);
    assert_eq!(out, "gamma_gr 3\nsequence v1 v2 v4\n");

    let (code, out, _) = run(&["interval", "solve", &file, "--witness", "--json"]);
    assert_eq!(code, 0);
    let r: IntervalReport = round_trips(&out);
    assert_eq!(r.gamma_gr, 3);
    assert_eq!(r.ab_pairs, 3);
    assert_eq!(r.witness.unwrap().as_slice(), [0, 1, 3]);
}

#[test]
fn interval_graph_out() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("g.edges");
    let (code, _, _) = run(&["interval", "solve", &data("five.intervals"), "--graph-out", target.to_str().unwrap()]);
    assert_eq!(code, 0);
    let g = grundy::io::parse_edge_list(&fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(g.n(), 5);
    assert!(g.has_edge(0, 1) && !g.has_edge(0, 4));
}

#[test]
fn solve_complete_graph() {
    let (code, out, _) = run(&["solve", &data("k5.edges")]);
    assert_eq!(code, 0);
    assert_eq!(out, "gamma_gr 1\n");

    let (code, out, _) = run(&["solve", &data("p4.edges"), "--witness", "--json"]);
    assert_eq!(code, 0);
    let r: SolveReport = round_trips(&out);
    assert!(r.exact);
    assert_eq!((r.n, r.m, r.gamma_gr), (4, 3, 3));
    assert_eq!(r.witness.unwrap().as_slice(), [0, 1, 2]);
}

#[test]
fn solve_budget_abort_exits_two() {
    let (code, out, _) = run(&["solve", &data("p4.edges"), "--budget", "1", "--witness"]);
    assert_eq!(code, 2);
    assert!(out.starts_with("aborted:"));
    assert!(out.contains("lower_bound "));

    let (code, out, _) = run(&["solve", &data("p4.edges"), "--budget", "1", "--json"]);
    assert_eq!(code, 2);
    let r: SolveReport = round_trips(&out);
    assert!(!r.exact);
}

#[test]
fn malformed_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_tmp(&dir, "bad.edges", "3 2\n0 1\n");
    let (code, out, err) = run(&["solve", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("error"));

    let loop_ = write_tmp(&dir, "loop.edges", "2 1\n1 1\n");
    assert_eq!(run(&["solve", loop_.to_str().unwrap()]).0, 1);

    let missing = dir.path().join("nope.edges");
    assert_eq!(run(&["solve", missing.to_str().unwrap()]).0, 1);

    let bad_iv = write_tmp(&dir, "bad.intervals", "1\n5 2\n");
    assert_eq!(run(&["interval", "solve", bad_iv.to_str().unwrap()]).0, 1);
}

#[test]
fn usage_errors_exit_one() {
    let (code, out, err) = run(&["frobnicate"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(!err.is_empty());
    assert_eq!(run(&["solve"]).0, 1);
    assert_eq!(run(&["sierpinski", "gen", "--p", "x", "--n", "2"]).0, 1);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["solve", "verify", "sierpinski", "interval", "analyze", "families", "accept"] {
        assert!(out.contains(sub), "help lacks {sub}");
    }
}

#[test]
fn verify_reports_first_illegal_step() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_tmp(&dir, "good.seq", "0 1 3\n");
    let bad = write_tmp(&dir, "bad.seq", "1 0\n");
    let g = data("p4.edges");

    let (code, out, _) = run(&["verify", &g, good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("legal\ndominating true\n"));

    let (code, out, _) = run(&["verify", &g, bad.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let r: VerifyReport = round_trips(&out);
    assert!(!r.legality.legal);
    assert_eq!(r.legality.first_illegal, Some(1));
}

#[test]
fn analyze_tables() {
    let dir = tempfile::tempdir().unwrap();
    let (_, h, _) = run(&["families", "h", "--m", "4", "--n", "4"]);
    let file = write_tmp(&dir, "h44.edges", &h);

    let (code, out, _) = run(&["analyze", "edges", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "element\trole\tgamma_before\tgamma_after\tdelta");
    assert_eq!(lines.count(), 7);

    let (code, out, _) = run(&["analyze", "vertices", file.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let r: AnalyzeReport = round_trips(&out);
    assert_eq!(r.kind, "vertices");
    assert_eq!(r.profile.records.len(), 7);
    assert!(r.profile.records.iter().all(|x| (-2..=0).contains(&x.delta)));
}

#[test]
fn families_json() {
    let (code, out, _) = run(&["families", "g", "--m", "5", "--n", "4", "--json"]);
    assert_eq!(code, 0);
    let r: FamilyReport = round_trips(&out);
    assert_eq!(r.n, 8);
    assert_eq!(r.vertex_roles.len(), 8);
    assert!(r.edges.iter().any(|(_, _, role)| role == "clique-edge"));

    assert_eq!(run(&["families", "g", "--m", "3", "--n", "3"]).0, 1);
}

#[test]
fn accept_subset_passes() {
    let (code, out, _) = run(&["accept", "--only", "3,5,6"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.contains("PASS")).count(), 3);
}
