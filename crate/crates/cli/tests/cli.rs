use std::io::Write;
use std::process::{Command as Process, Stdio};

use proptest::prelude::*;
use serde_json::Value;
use toric_nash::engine::{run, RunOptions, RunStatus};
use toric_nash::lattice::GuidingForm;
use toric_nash_cli::{
    execute, parse_exponents, Command, FormSpec, Format, Input, Outcome, RunConfig,
};

const EXAMPLE: &str = "1 0\n2 1\n0 2\n0 3\n";

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_toric-nash"))
}

fn cli(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn config(command: Command, points: &str) -> RunConfig {
    RunConfig::new(command, Input::Inline(points.into()))
}

fn capture(cfg: &RunConfig) -> (Outcome, String) {
    let mut buf = Vec::new();
    let outcome = execute(cfg, &mut buf).unwrap();
    (outcome, String::from_utf8(buf).unwrap())
}

fn vertical() -> Option<FormSpec> {
    Some(FormSpec {
        a: "0".into(),
        b: "1".into(),
        sqrt: None,
    })
}

#[test]
fn run_reports_the_example() {
    let (outcome, text) = capture(&RunConfig {
        form: vertical(),
        ..config(Command::Run, EXAMPLE)
    });
    assert_eq!(outcome, Outcome::Complete);
    assert!(
        text.trim_end()
            .ends_with("terminated in 1 step; generators: (-2,1) (1,0)"),
        "{text}"
    );
    assert!(text.contains("chart: (-2,1) (-2,2) (-1,2) (-1,3) (1,0) (2,1)"));
}

#[test]
fn bound_reports_metrics() {
    let (_, text) = capture(&RunConfig {
        form: vertical(),
        ..config(Command::Bound, EXAMPLE)
    });
    assert_eq!(text.lines().next(), Some("u0=3 v0=2 bound=14"));
    assert_eq!(text.lines().nth(1), Some("u1=1 v1=1"));
}

#[test]
fn irrational_form_without_cap_is_a_usage_error() {
    let (code, _, err) = cli(
        &[
            "run", "--points", EXAMPLE, "--form", "1", "1", "--sqrt", "3",
        ],
        None,
    );
    assert_eq!(code, 1);
    assert!(err.starts_with("error[usage]"), "{err}");
    let (code, out, _) = cli(
        &[
            "run",
            "--points",
            EXAMPLE,
            "--form",
            "sqrt",
            "1",
            "--sqrt",
            "3",
            "--max-steps",
            "20",
        ],
        None,
    );
    assert_eq!(code, 0);
    assert!(
        out.trim_end()
            .ends_with("terminated in 2 steps; generators: (0,1) (1,-1)"),
        "{out}"
    );
}

#[test]
fn stdin_and_files() {
    let (code, out, _) = cli(&["run", "-", "--form", "0", "1"], Some(EXAMPLE));
    assert_eq!(code, 0);
    assert!(out.contains("terminated in 1 step"));
    let path = std::env::temp_dir().join(format!("toric-nash-cli-{}.json", std::process::id()));
    std::fs::write(&path, "[[1,0],[2,1],[0,2],[0,3]]").unwrap();
    let (code, out, _) = cli(&["hilbert", path.to_str().unwrap()], None);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(0,2) (0,3) (1,0) (2,1)");
}

#[test]
fn step_limit_exits_two() {
    let (code, out, _) = cli(
        &[
            "run",
            "--points",
            "1 0;0 1;-3 5",
            "--policy",
            "raw",
            "--max-steps",
            "2",
        ],
        None,
    );
    assert_eq!(code, 2);
    assert!(out.contains("step limit reached after 2 steps"), "{out}");
}

#[test]
fn input_errors_exit_one_with_codes() {
    for (points, code) in [
        ("1 0;2", "syntax-error"),
        ("# nothing", "empty-input"),
        ("1 0;2 0", "collinear"),
        ("2 0;0 1", "not-generating"),
        ("1 0;-1 0;0 1", "origin-in-hull"),
        ("0 0", "contains-origin"),
    ] {
        let (status, _, err) = cli(&["check", "--points", points], None);
        assert_eq!(status, 1, "{points}");
        assert!(
            err.starts_with(&format!("error[{code}]")),
            "{points}: {err}"
        );
    }
    let (status, _, err) = cli(&["run", "--points", EXAMPLE, "--form", "1", "-1"], None);
    assert_eq!(status, 1);
    assert!(err.starts_with("error[negative-value]"), "{err}");
    let (status, _, _) = cli(&["run", "--points", EXAMPLE, "--policy", "nope"], None);
    assert_eq!(status, 1);
}

#[test]
fn json_uses_decimal_strings() {
    let cfg = RunConfig {
        format: Some(Format::Json),
        ..config(Command::Run, EXAMPLE)
    };
    let (_, text) = capture(&cfg);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["status"], "terminated");
    assert_eq!(
        v["final_generators"],
        serde_json::json!([["-2", "1"], ["1", "0"]])
    );
    assert_eq!(
        v["steps"][0]["l_values"],
        serde_json::json!(["2", "3", "0", "1"])
    );
    assert_eq!(
        v["steps"][0]["map"],
        serde_json::json!([["1", "0"], ["0", "1"]])
    );
    let cfg = RunConfig {
        format: Some(Format::Json),
        ..config(Command::Bound, EXAMPLE)
    };
    let v: Value = serde_json::from_str(&capture(&cfg).1).unwrap();
    assert_eq!(v["bound"], "14");
    let cfg = RunConfig {
        format: Some(Format::Json),
        depth: 2,
        ..config(Command::Explore, EXAMPLE)
    };
    let v: Value = serde_json::from_str(&capture(&cfg).1).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 5);
}

#[test]
fn dot_export() {
    let (code, out, _) = cli(&["export-dot", "--points", EXAMPLE, "--depth", "1"], None);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph chart_tree {"));
    assert!(out.contains("n0 -> n2 [label=\"3,4\"]"), "{out}");
    let (code, _, _) = cli(
        &["export-dot", "--points", EXAMPLE, "--format", "json"],
        None,
    );
    assert_eq!(code, 1);
}

#[test]
fn uniformize_both_ranks() {
    let (code, out, _) = cli(
        &[
            "uniformize",
            "--points",
            EXAMPLE,
            "--nu1",
            "0",
            "--nu2",
            "1",
        ],
        None,
    );
    assert_eq!(code, 0);
    assert!(
        out.trim_end()
            .ends_with("terminated in 1 step; generators: (-2,1) (1,0)"),
        "{out}"
    );
    let (code, out, _) = cli(
        &[
            "uniformize",
            "--points",
            EXAMPLE,
            "--nu1",
            "1,0",
            "--nu2",
            "0,1",
        ],
        None,
    );
    assert_eq!(code, 0);
    assert!(out.contains("terminated in 2 steps"), "{out}");
    let (code, _, err) = cli(
        &[
            "uniformize",
            "--points",
            EXAMPLE,
            "--nu1",
            "-1",
            "--nu2",
            "0",
        ],
        None,
    );
    assert_eq!(code, 1);
    assert!(err.starts_with("error[not-centered]"), "{err}");
}

#[test]
fn default_cap_is_the_bound() {
    let cfg = RunConfig {
        format: Some(Format::Json),
        ..config(Command::Run, EXAMPLE)
    };
    let v: Value = serde_json::from_str(&capture(&cfg).1).unwrap();
    assert_eq!(v["max_steps"], 14);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exit_code_follows_status(
        pts in prop::collection::vec((-4i64..=4, 1i64..=4), 2..=5),
        cap in 0usize..4,
    ) {
        let text: String = pts.iter().map(|(x, y)| format!("{x} {y}\n")).collect();
        let xs = parse_exponents(&text).unwrap();
        let opts = RunOptions { max_steps: cap, ..RunOptions::default() };
        let Ok(trace) = run(&xs, &GuidingForm::vertical(), &opts) else {
            let cfg = RunConfig { max_steps: Some(cap), ..config(Command::Run, &text) };
            prop_assert!(execute(&cfg, &mut Vec::new()).is_err());
            return Ok(());
        };
        let cfg = RunConfig { max_steps: Some(cap), ..config(Command::Run, &text) };
        let (outcome, _) = capture(&cfg);
        let want = if trace.status == RunStatus::Terminated { 0 } else { 2 };
        prop_assert_eq!(outcome.exit_code(), want);
    }
}
