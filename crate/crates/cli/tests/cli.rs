use std::path::Path;
use std::process::{Command, Output};

use multirel::finite::{builtin_model, render_algebra};
use multirel::io::{parse_env, parse_relation_literal};

fn multirel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multirel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const ENV: &str = "universe a b c\n\nrel R\na -> {}\nb -> {a, c}\nend\n\nrel P\nb -> {b}\nend\n";

#[test]
fn eval_domain_of_empty_output() {
    let dir = tempfile::tempdir().unwrap();
    let env = write(dir.path(), "e.txt", "universe a\nrel R\na -> {}\nend\n");
    let o = multirel(&["eval", "--env", &env, "--term", "d(R)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{ a -> {a} }\n");
}

#[test]
fn eval_output_reparses() {
    let dir = tempfile::tempdir().unwrap();
    let env = write(dir.path(), "e.txt", ENV);
    let loaded = parse_env(ENV).unwrap();
    let o = multirel(&["eval", "--env", &env, "--term", "R ; R || <R>P"]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    let compact = parse_relation_literal(loaded.universe(), line.trim()).unwrap();
    let o = multirel(&["eval", "--env", &env, "--term", "R ; R || <R>P", "--block", "--name", "X"]);
    let block = parse_env(&stdout(&o)).unwrap();
    assert_eq!(block.lookup("X").unwrap(), &compact);
}

#[test]
fn errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let env = write(dir.path(), "e.txt", ENV);
    let o = multirel(&["eval", "--env", &env, "--term", "d(R"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    let bad = write(dir.path(), "bad.txt", "universe a\nrel R\na -> {z}\nend\n");
    let o = multirel(&["eval", "--env", &bad, "--term", "R"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(multirel(&["laws", "--mode", "sometimes"]).status.code(), Some(2));
    assert_eq!(multirel(&["models"]).status.code(), Some(2));
}

#[test]
fn proto_laws_pass_exhaustively() {
    let o = multirel(&["laws", "--size", "2", "--mode", "exhaustive", "--filter", "proto."]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("PASS\n"));
}

#[test]
fn law_reports_are_reproducible() {
    let args = ["laws", "--size", "3", "--mode", "random", "--seed", "7", "--samples", "40", "--filter", "modal."];
    let a = multirel(&args);
    let b = multirel(&args);
    let mut seq = args.to_vec();
    seq.push("--sequential");
    let c = multirel(&seq);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn counterexamples_reproduce() {
    let o = multirel(&["counterexamples"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for id in ["seq_assoc", "dia_additivity", "segerberg", "fixcounter"] {
        assert!(text.contains(id), "{id} missing");
    }
    assert!(!text.contains("MISMATCH"));
    let o = multirel(&["counterexamples", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn star_trace() {
    let dir = tempfile::tempdir().unwrap();
    let env = write(dir.path(), "e.txt", "universe a b\nrel R\na -> {b}\nend\n");
    let o = multirel(&["star", "--env", &env, "--rel", "R", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "x0 = {}\nx1 = { a -> {a}, b -> {b} }\nx2 = { a -> {a}, a -> {b}, b -> {b} }\n\
         stabilized at x2\nR* = { a -> {a}, a -> {b}, b -> {b} }\n"
    );
}

#[test]
fn model_files_are_checked() {
    let dir = tempfile::tempdir().unwrap();
    let mut m = builtin_model("chain3").unwrap();
    let good = write(dir.path(), "good.txt", &render_algebra(&m));
    let o = multirel(&["models", "--check", &good, "--system", "dp-trioid"]);
    assert_eq!(o.status.code(), Some(0));
    m.seq[2][1] = 1;
    let bad = write(dir.path(), "bad.txt", &render_algebra(&m));
    let o = multirel(&["models", "--check", &bad, "--system", "dp-trioid"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL proto.seq_right_unit"));
    let o = multirel(&["models", "--check", &good, "--system", "ap-trioid"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn builtin_and_search() {
    let o = multirel(&["models", "--builtin"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS chain4 dp-trioid"));
    let o = multirel(&["models", "--search", "--system", "dp-trioid", "--size", "3", "--budget", "100", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exhausted"], true);
    assert!(!v["models"].as_array().unwrap().is_empty());
}
