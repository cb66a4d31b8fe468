use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const A348410_F: &str = "1/((1-x)*(1-x^2))";

fn algdiag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algdiag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("algdiag-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn seq_prints_first_eleven_values() {
    let out = algdiag(&["seq", "--f", A348410_F, "--n-to", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let values: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(
        values,
        ["1", "1", "5", "19", "85", "376", "1715", "7890", "36693", "171820", "809380"]
    );
}

#[test]
fn seq_defaults_to_ten() {
    let out = algdiag(&["seq", "--f", A348410_F]);
    assert_eq!(stdout(&out).lines().count(), 11);
}

#[test]
fn alg_eq_of_one() {
    let out = algdiag(&["alg-eq", "--f", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "A - 1\n");
}

#[test]
fn alg_eq_json_matches_golden_file() {
    let out = algdiag(&["alg-eq", "--f", A348410_F, "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let golden: Value =
        serde_json::from_str(&std::fs::read_to_string(data("a348410_alg_eq.json")).unwrap())
            .unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["subcommand"], "alg-eq");
    assert_eq!(v["equation"], golden);
}

#[test]
fn check_rec_bundled_file_passes() {
    let rec = data("kotesovec.json");
    for extra in [&[][..], &["--parallel"][..]] {
        let mut args = vec![
            "check-rec",
            "--f",
            A348410_F,
            "--rec",
            &rec,
            "--from",
            "3",
            "--to",
            "1000",
        ];
        args.extend_from_slice(extra);
        let out = algdiag(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn check_rec_wrong_sequence_exits_1() {
    let rec = data("kotesovec.json");
    let out = algdiag(&[
        "check-rec",
        "--f",
        "1/(1-x)",
        "--rec",
        &rec,
        "--from",
        "3",
        "--to",
        "20",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "fail");
    assert!(!out.stderr.is_empty());
}

#[test]
fn derived_recurrence_round_trips_through_check_rec() {
    let out = algdiag(&["rec", "--f", A348410_F, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let path = scratch("derived.json");
    std::fs::write(&path, v["recurrence"].to_string()).unwrap();
    let out = algdiag(&[
        "check-rec",
        "--f",
        A348410_F,
        "--rec",
        path.to_str().unwrap(),
        "--from",
        "4",
        "--to",
        "120",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn verify_series_and_ode() {
    let out = algdiag(&["verify-series", "--f", A348410_F]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("through t^30"));
    let out = algdiag(&["ode", "--f", "1/(1-x)", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["operator"]["order"], 2);
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "verify-series",
        "--f",
        A348410_F,
        "--order",
        "12",
        "--format",
        "json",
    ];
    assert_eq!(algdiag(&args).stdout, algdiag(&args).stdout);
}

#[test]
fn output_flag_writes_file() {
    let path = scratch("seq.txt");
    let out = algdiag(&[
        "seq",
        "--f",
        "1/(1-x)",
        "--n-to",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1\n1\n3\n10\n");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    for args in [
        &["seq", "--f", "1/(1-x"][..],
        &["seq", "--f", "x"][..],
        &["frobnicate"][..],
        &[
            "check-rec",
            "--f",
            "1",
            "--rec",
            "/nonexistent.json",
            "--from",
            "3",
            "--to",
            "5",
        ][..],
        &[
            "check-rec",
            "--f",
            "1/(1-x)",
            "--rec",
            "/nonexistent.json",
            "--from",
            "9",
            "--to",
            "5",
        ][..],
    ] {
        let out = algdiag(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
