//! End-to-end tests against the built binary: golden outputs, run-to-run
//! determinism, input formats, and the exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graph-zeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn golden_outputs_are_stable() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["--format", "json", "check", "--graph", "builtin:K4", "--suite", "all"],
            include_str!("golden/check_k4_all.json"),
        ),
        (
            &["check", "--graph", "builtin:K4", "--suite", "all"],
            include_str!("golden/check_k4_all.txt"),
        ),
        (
            &["--format", "json", "poles", "--graph", "builtin:K4", "--u", "0"],
            include_str!("golden/poles_k4_u0.json"),
        ),
        (
            &["poles", "--graph", "builtin:K4", "--u", "0"],
            include_str!("golden/poles_k4_u0.txt"),
        ),
        (
            &["--format", "json", "poles", "--graph", "builtin:K4", "--u", "-1/2"],
            include_str!("golden/poles_k4_um12.json"),
        ),
        (
            &["poles", "--graph", "builtin:K4", "--u", "-1/2"],
            include_str!("golden/poles_k4_um12.txt"),
        ),
    ];
    for (args, golden) in cases {
        let first = run(args);
        assert!(first.status.success(), "{args:?} failed: {first:?}");
        let second = run(args);
        assert_eq!(
            first.stdout, second.stdout,
            "{args:?} is not deterministic across runs"
        );
        assert_eq!(
            String::from_utf8(first.stdout).unwrap(),
            *golden,
            "{args:?} drifted from its golden file"
        );
    }
}

#[test]
fn json_outputs_parse() {
    for args in [
        &["--format", "json", "info", "--graph", "builtin:Petersen"][..],
        &["--format", "json", "zeta", "--graph", "builtin:C4", "--u", "1/3"][..],
        &["--format", "json", "check", "--graph", "builtin:P3", "--suite", "sigma"][..],
        &["--format", "json", "poles", "--graph", "builtin:C5", "--u", "-3"][..],
    ] {
        let out = run(args);
        assert!(out.status.success(), "{args:?} failed");
        let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
        assert_eq!(doc["schema_version"], "1");
        assert_eq!(doc["tool"], "graph-zeta");
    }
}

#[test]
fn edge_list_and_json_documents_load_identically() {
    let from_txt = run(&["--format", "json", "info", "--graph", &fixture("house.txt")]);
    let from_json = run(&["--format", "json", "info", "--graph", &fixture("house.json")]);
    assert!(from_txt.status.success());
    assert!(from_json.status.success());
    let a: serde_json::Value = serde_json::from_slice(&from_txt.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&from_json.stdout).unwrap();
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["inputs"]["fingerprint"], b["inputs"]["fingerprint"]);
}

#[test]
fn violations_exit_one() {
    let out = run(&[
        "check",
        "--graph",
        "builtin:K4",
        "--suite",
        "expressions",
        "--debug-corrupt",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"), "corrupted run must report FAIL");
}

#[test]
fn input_errors_exit_two() {
    let dup = fixture("dup_edge.txt");
    let cases: &[&[&str]] = &[
        &["info", "--graph", "builtin:zzz"],
        &["info", "--graph", "/nonexistent/graph.txt"],
        &["info", "--graph", &dup],
        &["zeta", "--graph", "builtin:K4", "--u", "0.5"],
        &["zeta", "--graph", "builtin:K4"],
        &["poles", "--graph", "builtin:K4", "--u", "1"],
        &["check", "--graph", "builtin:K4", "--suite", "nonsense"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?} must exit 2");
    }
}

#[test]
fn inapplicable_suites_exit_zero() {
    let out = run(&["check", "--graph", "builtin:P3", "--suite", "fe-q"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("NOT-APPLICABLE"));
}
