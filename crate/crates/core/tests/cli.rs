use std::process::Command;

use knitweave::cli::{run, Outcome};

const EXAMPLE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/seven_circles.json");

fn cli(args: &[&str]) -> Outcome {
    let mut full = vec!["knitweave"];
    full.extend_from_slice(args);
    run(full, || Ok(String::new()))
}

#[test]
fn homfly_braid_json() {
    let out = cli(&["homfly", "--braid", "1,1,1", "--strands", "2", "--format", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let terms = v["framed"]["terms"].as_array().unwrap();
    let got: Vec<(i64, i64, String)> = terms
        .iter()
        .map(|t| (t["v"].as_i64().unwrap(), t["z"].as_i64().unwrap(), t["c"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(got, vec![(-1, 0, "2".into()), (-1, 2, "1".into()), (1, 0, "-1".into())]);
}

#[test]
fn homfly_unknot() {
    let out = cli(&["homfly", "--braid", "", "--strands", "1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("H = 1\nP = 1\n"), "{}", out.stdout);
}

#[test]
fn homfly_pd_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hopf.pd");
    std::fs::write(&path, "X[2,1,4,3;+]\nX[3,4,1,2;+]\n").unwrap();
    let out = cli(&["homfly", "--pd", path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("components: 2"));

    std::fs::write(&path, "X[2,1,4,3;+]\nX[3,4,1,2;-]\n").unwrap();
    let out = cli(&["homfly", "--pd", path.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("not planar"), "{}", out.stderr);

    std::fs::write(&path, "X[2,1,4,3;+]\nX[3,4,1,2;?]\n").unwrap();
    let out = cli(&["homfly", "--pd", path.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
}

#[test]
fn table_round_trip() {
    let json = cli(&["homfly", "--knitted", EXAMPLE, "--format", "json"]);
    let table = cli(&["homfly", "--knitted", EXAMPLE, "--format", "table"]);
    let rendered = knitweave::cli::cmd_table(&json.stdout);
    assert!(table.stdout.starts_with(&format!("H (framed):\n{}", rendered.stdout)));
    let again = knitweave::cli::cmd_table(&json.stdout);
    assert_eq!(rendered, again);
    let bottom = rendered.stdout.lines().find(|l| l.starts_with("z^0")).unwrap();
    assert_eq!(bottom.split_whitespace().nth(2), Some("2"));
    assert!(rendered.stdout.lines().last().unwrap().trim_start().starts_with("v^-6"));
}

#[test]
fn table_unknot_and_errors() {
    let out = knitweave::cli::cmd_table(r#"{"terms":[{"v":0,"z":0,"c":"1"}]}"#);
    assert_eq!(out.stdout, "z^0 |   1\n    +----\n      v^0\n");
    assert_eq!(knitweave::cli::cmd_table("{").code, 2);
    assert_eq!(knitweave::cli::cmd_table(r#"{"x":1}"#).code, 2);
}

#[test]
fn verify_ft_cases() {
    let out = cli(&["verify-ft", "--braid", "1", "--strands", "2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("H_-(D) = 1\n") && out.stdout.contains("PASS"));
    let out = cli(&["verify-ft", "--knitted", EXAMPLE]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("H_+(FT D) = 2 + 3*z^2 + z^4"));
    let out = cli(&["verify-ft", "--knitted", EXAMPLE, "--inject-fault"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("difference") && out.stdout.contains("FAIL"));
}

#[test]
fn hecke_expand_text() {
    let out = cli(&["hecke-expand", "--braid", "1,1", "--strands", "2"]);
    assert_eq!(out.stdout, "1,2 : 1\n2,1 : z\n");
    let out = cli(&["hecke-expand", "--braid", "-1", "--strands", "2"]);
    assert_eq!(out.stdout, "1,2 : -z\n2,1 : 1\n");
}

#[test]
fn random_test_summaries() {
    let a = cli(&["random-test", "--seed", "7", "--count", "50", "--max-strands", "3"]);
    assert!(a.stdout.ends_with("50/50 pass\n"), "{}", a.stdout);
    let b = cli(&["random-test", "--seed", "7", "--count", "50", "--max-strands", "3"]);
    assert_eq!(a, b);
    let empty = cli(&["random-test", "--count", "0"]);
    assert!(empty.stdout.ends_with("0/0 pass\n"));
}

#[test]
fn bad_arguments() {
    assert_eq!(cli(&["homfly", "--braid", "1,x"]).code, 2);
    assert_eq!(cli(&["homfly", "--braid", "3", "--strands", "2"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["homfly"]).code, 2);
}

#[test]
fn binary_exit_codes_and_thread_cap() {
    let bin = env!("CARGO_BIN_EXE_knitweave");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    assert_eq!(status(&["verify-ft", "--braid", "1,1,1", "--strands", "2"]).status.code(), Some(0));
    assert_eq!(status(&["verify-ft", "--braid", "1", "--strands", "2", "--inject-fault"]).status.code(), Some(1));
    assert_eq!(status(&["homfly", "--pd", "/nonexistent/file"]).status.code(), Some(2));
    let args = ["random-test", "--seed", "3", "--count", "40"];
    let one = Command::new(bin).args(args).env("KNITWEAVE_THREADS", "1").output().unwrap();
    let many = Command::new(bin).args(args).env("KNITWEAVE_THREADS", "4").output().unwrap();
    assert_eq!(one.stdout, many.stdout);
    assert!(String::from_utf8_lossy(&one.stdout).ends_with("40/40 pass\n"));
}
