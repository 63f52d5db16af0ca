use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("aspalg-cli-{tag}-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let path = self.0.join(name);
        std::fs::write(&path, text).unwrap();
        path
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn aspalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aspalg")).args(args).output().unwrap()
}

fn aspalg_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_aspalg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compose_single_rule_with_disjunctive_program() {
    let dir = Scratch::new("compose");
    let r = dir.file("r.lp", "#alphabet a, b, c, d.\na :- not b.\n");
    let big_r = dir.file("R.lp", "#alphabet a, b, c, d.\nb :- not c, not d.\nb :- c, d.\n");
    let out = aspalg(&["compose", s(&r), s(&big_r)]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "#alphabet a, b, c, d.\na :- c, not c.\na :- c, not d.\na :- d, not c.\na :- d, not d.\n"
    );
}

#[test]
fn answer_sets_of_even_loop() {
    let out = aspalg_stdin(&["answer-sets", "-"], "a :- not b.\nb :- not a.\n");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "a\nb\n");

    let out = aspalg_stdin(&["answer-sets", "-"], "a :- not a.\n");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");

    let out = aspalg_stdin(&["answer-sets", "-", "--json"], "a :- not b.\nb :- not a.\n");
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["answer_sets"], serde_json::json!([["a"], ["b"]]));
}

#[test]
fn strong_equivalence_reports_context() {
    let dir = Scratch::new("strong");
    let p = dir.file("p.lp", "#alphabet a, b.\na.\n");
    let r = dir.file("r.lp", "#alphabet a, b.\na :- not b.\n");

    let out = aspalg(&["equiv", "--mode", "strong", s(&p), s(&r)]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("not strongly equivalent\n"), "{text}");
    assert!(text.contains("context: b.\n"), "{text}");
    assert!(text.contains("{a, b}"), "{text}");

    let out = aspalg(&["equiv", s(&p), s(&r)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "equivalent\n");

    let out = aspalg(&["equiv", "--mode", "strong", "--json", s(&p), s(&r)]);
    assert_eq!(out.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["verdict"]["equivalent"], false);
    assert_eq!(value["verdict"]["witness_kind"], "context");
}

#[test]
fn uniform_and_subsumption_modes() {
    let dir = Scratch::new("modes");
    let p = dir.file("p.lp", "#alphabet a, b.\na :- b.\n");
    let r = dir.file("r.lp", "#alphabet a, b.\na :- b.\na :- b, not a.\n");
    for mode in ["as", "subsumption", "uniform", "strong"] {
        let out = aspalg(&["equiv", "--mode", mode, s(&p), s(&r)]);
        assert_eq!(out.status.code(), Some(0), "mode {mode}");
    }
}

#[test]
fn parse_errors_exit_two() {
    let out = aspalg_stdin(&["answer-sets", "-"], "a :- .\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("<stdin>:1:"));

    let out = aspalg(&["answer-sets", "/nonexistent/program.lp"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumeration_bound_exits_three() {
    let out = aspalg_stdin(&["answer-sets", "--max-atoms", "1", "-"], "a :- not b.\n");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_round_trips() {
    let text = "#alphabet a, b, c.\na :- b, not c.\nc.\n";
    let out = aspalg_stdin(&["star", "-"], text);
    let star = stdout(&out);
    let again = aspalg_stdin(&["star", "-"], &star);
    assert_eq!(stdout(&again), star);

    let out = aspalg_stdin(&["cup", "-", "-"], "");
    assert_eq!(out.status.code(), Some(0));

    let first = aspalg_stdin(&["not", "-"], text);
    let second = aspalg_stdin(&["not", "-"], text);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn interpretation_commands() {
    let program = "a :- not b.\nb :- c.\n";
    let out = aspalg_stdin(&["tp", "-i", "c", "-"], program);
    assert_eq!(stdout(&out), "a, b\n");
    let out = aspalg_stdin(&["reduct", "--kind", "gl", "-i", "a", "-"], program);
    assert_eq!(stdout(&out), "#alphabet a, b, c.\na.\nb :- c.\n");
    let out = aspalg_stdin(&["lm", "-"], "a.\nb :- a.\nc :- d.\n");
    assert_eq!(stdout(&out), "a, b\n");
    let out = aspalg_stdin(&["lm", "-"], "a :- not b.\n");
    assert_eq!(out.status.code(), Some(2));
    let out = aspalg(&["ominus", "-i", "a, b"]);
    assert_eq!(stdout(&out), "#alphabet a, b.\na.\nb.\n");
}

#[test]
fn alphabet_flag_extends_inputs() {
    let out = aspalg_stdin(&["--alphabet", "a,b,c", "not", "-"], "a.\n");
    assert_eq!(stdout(&out), "#alphabet a, b, c.\nb.\nc.\n");
}

#[test]
fn rename_swaps_atoms() {
    let out = aspalg_stdin(&["rename", "--perm", "(a b)", "-"], "a :- not b.\n");
    assert_eq!(stdout(&out), "#alphabet a, b.\nb :- not a.\n");
}

#[test]
fn laws_refute_non_laws_and_write_witnesses() {
    let dir = Scratch::new("laws");
    let witnesses = dir.0.join("w");
    let out = aspalg(&[
        "laws",
        "--trials",
        "20",
        "--seed",
        "7",
        "--law",
        "compose.unit",
        "--law",
        "negation.compose",
        "--witness-dir",
        s(&witnesses),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let records = value.as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert!(records.iter().all(|r| r["passed"] == true));
    let files = records[1]["witness_files"].as_array().unwrap();
    assert_eq!(files.len(), 2);
    for f in files {
        assert!(Path::new(f.as_str().unwrap()).exists());
    }

    let out = aspalg(&["laws", "--law", "no.such.law"]);
    assert_eq!(out.status.code(), Some(2));
}
