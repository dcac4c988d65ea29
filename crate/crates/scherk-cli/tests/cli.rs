//! End-to-end checks of the binary: output shapes, determinism, exit codes.

use std::process::{Command, Output};

fn scherk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scherk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn expand_fd_matches_reference_rendering() {
    let out = scherk(&["expand", "--fD", "--p", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "f^3 D^3 + 3 f^2 f' D^2 + f (f')^2 D + f^2 f'' D\n"
    );
}

#[test]
fn csv_header_is_versioned() {
    let out = scherk(&["gamma", "--p", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# scherk-calculus v0.1.0 gamma"));
    assert_eq!(lines.next(), Some("a,gamma"));
    assert_eq!(lines.next(), Some("(2),1"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["gamma", "--p", "5", "--format", "json"],
        vec!["forests", "--p", "4", "--k", "3", "--format", "csv"],
        vec!["trees", "--p", "5", "--format", "csv"],
    ] {
        let a = scherk(&args);
        let b = scherk(&args);
        assert_eq!(a.stdout, b.stdout, "args: {args:?}");
        assert!(a.status.success());
    }
}

#[test]
fn gamma_json_has_four_terms_for_p3() {
    let out = scherk(&["gamma", "--p", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["meta"]["tool"], "scherk-calculus");
    assert_eq!(doc["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn alpha_at_k2_is_the_lah_row() {
    let out = scherk(&["alpha", "--p", "4", "--k", "2", "--format", "csv"]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows, ["1,24", "2,36", "3,12", "4,1"]);
}

#[test]
fn codec_check_reports_all_roundtrips() {
    let out = scherk(&["trees", "--codec", "--p", "4", "--check"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "24/24 roundtrips pass\n");
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = scherk(&["verify", "stirling-rows", "--n", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 failures"));
}

#[test]
fn exit_codes_for_invalid_configs() {
    // k = 1 has no forest model
    let out = scherk(&["forests", "--p", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // exceeded budget
    let out = scherk(&["forests", "--p", "4", "--k", "3", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand
    let out = scherk(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown verify suite
    let out = scherk(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_scherk"))
        .args(["forests", "--p", "4", "--k", "3"])
        .env("SCHERK_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_scherk"))
        .args(["forests", "--p", "4", "--k", "3"])
        .env("SCHERK_BUDGET", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}
