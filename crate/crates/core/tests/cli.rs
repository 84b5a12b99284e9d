use std::process::{Command, Output};

use num_bigint::BigInt;

use krawtchouk::algebra::Matrix;
use krawtchouk::krawtchouk::k_genfunc;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krawtchouk")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gen_json_round_trips() {
    for n in [0, 3, 9] {
        let text = stdout(&["gen", "krawtchouk", "--n", &n.to_string(), "--format", "json"]);
        assert_eq!(Matrix::<BigInt>::from_json_str(&text).unwrap(), k_genfunc(n).matrix);
    }
}

#[test]
fn gen_examples() {
    assert_eq!(stdout(&["gen", "symmetric", "--n", "2", "--format", "csv"]), "1,2,1\n2,0,-2\n1,-2,1\n");
    assert_eq!(
        stdout(&["gen", "general", "--n", "1", "--alpha", "2", "--beta", "3", "--format", "csv"]),
        "1,1\n2,3\n"
    );
    assert_eq!(stdout(&["pathsum", "--n", "3", "--p", "1", "--q", "2"]), "-1\n");
    assert_eq!(stdout(&["transform", "--n", "3", "--covector", "8,4,2,1"]), "27,9,3,1\n");
    assert_eq!(stdout(&["macwilliams", "--n", "3", "--basis", "110"]), "2·[1,1,1,1] = K·[1,0,1,0] ✓\n");
}

#[test]
fn verify_is_deterministic_across_workers() {
    let args = |w: &'static str| ["verify", "--suites", "master,macwilliams,quaternion", "--n-max", "5", "--workers", w];
    let one = stdout(&args("1"));
    let four = stdout(&args("4"));
    assert_eq!(one, four);
    let json: serde_json::Value = serde_json::from_str(&one).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 3);
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let text = stdout(&["verify", "--suites", "ortho", "--n-max", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--suites", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "krawtchouk"]).status.code(), Some(2));
    assert_eq!(run(&["macwilliams", "--n", "3", "--basis", "11"]).status.code(), Some(2));
    assert_eq!(run(&["pyramid", "--direction", "up", "--rows", "3"]).status.code(), Some(2));
    assert_eq!(run(&["pathsum", "--n", "3", "--p", "4", "--q", "0"]).status.code(), Some(2));
}

#[test]
fn snake_outputs() {
    let svg = stdout(&["snake", "--n", "5", "--phi", "pi/2"]);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<polyline").count(), 5);
    let csv = stdout(&["snake", "--n", "5", "--format", "csv"]);
    let blocks: Vec<&str> = csv.split("\n\n").filter(|b| !b.trim().is_empty()).collect();
    assert_eq!(blocks.len(), 5);
    assert!(blocks.iter().all(|b| b.lines().count() == 6));
}
