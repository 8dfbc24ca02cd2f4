use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn moufang(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moufang"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn paige_build_emits_order_120_table() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("m2.txt");
    let out = moufang(&[
        "paige",
        "build",
        "--field",
        "2^1",
        "--out",
        path(&table),
        "--json",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report = json(&out);
    assert_eq!(report["schema"], 1);
    assert_eq!(report["values"]["m_order"], 120);
    let text = std::fs::read_to_string(&table).unwrap();
    assert!(text.starts_with("order 120\n"));

    let check = moufang(&[
        "loop",
        "check",
        "--table",
        path(&table),
        "--moufang",
        "--ip",
        "--associative",
    ]);
    assert_eq!(check.status.code(), Some(1));
    let stdout = String::from_utf8(check.stdout).unwrap();
    assert!(stdout.contains("PASS moufang"));
    assert!(stdout.contains("PASS inverse property"));
    assert!(stdout.contains("FAIL associative"));
}

#[test]
fn paige_build_without_out_prints_table() {
    let out = moufang(&["paige", "build", "--field", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 121);
}

#[test]
fn classify_reports_parity_disagreement() {
    let out = moufang(&["paige", "classify", "--field", "3^2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["values"]["closed_under_sqrt"], false);
    assert_eq!(v["values"]["disagrees_with_parity_claim"], true);
    assert_eq!(v["inputs"]["field"], "3^2");
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("q.txt");
    assert!(moufang(&[
        "corpus",
        "emit",
        "--name",
        "chein-Q8",
        "--out",
        path(&table)
    ])
    .status
    .success());
    let args = [
        "algebra",
        "omega",
        "--table",
        path(&table),
        "--field",
        "2",
        "--json",
    ];
    let a = moufang(&args);
    let b = moufang(&args);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stdout)
    );
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert!(v["inputs"]["table"]
        .as_str()
        .unwrap()
        .starts_with("sha256:"));
    assert!(v.get("elapsed_ms").is_none());
    let timed = json(&moufang(&[
        "algebra",
        "omega",
        "--table",
        path(&table),
        "--field",
        "2",
        "--json",
        "--timing",
    ]));
    assert!(timed["elapsed_ms"].is_u64());
}

#[test]
fn omega_report_with_subloop() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("z4.txt");
    let report = dir.path().join("r.json");
    std::fs::write(&table, "order 4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n").unwrap();
    let out = moufang(&[
        "algebra",
        "omega",
        "--table",
        path(&table),
        "--field",
        "2^1",
        "--subloop",
        "0,2",
        "--report",
        path(&report),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["values"]["power_dims"], serde_json::json!([3, 2, 1, 0]));
    assert_eq!(v["values"]["nilpotency_index"], 4);
    assert_eq!(v["values"]["omega_h_dim"], 2);

    let z3 = dir.path().join("z3.txt");
    std::fs::write(&z3, "order 3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let v = json(&moufang(&[
        "algebra",
        "omega",
        "--table",
        path(&z3),
        "--field",
        "2",
        "--json",
    ]));
    assert_eq!(v["values"]["nilpotency_index"], "none");
}

#[test]
fn series_of_chein_q8() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("q.txt");
    moufang(&[
        "corpus",
        "emit",
        "--name",
        "chein-Q8",
        "--out",
        path(&table),
    ]);
    let v = json(&moufang(&[
        "loop",
        "series",
        "--table",
        path(&table),
        "--moufang-mode",
        "--json",
    ]));
    assert_eq!(v["values"]["class"], 2);
    assert_eq!(v["values"]["upper"]["schema"], 1);
}

#[test]
fn corpus_list_names_everything() {
    let out = moufang(&["corpus", "list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), moufang::corpus::CORPUS_NAMES.len());
    assert!(text.lines().any(|l| l.starts_with("chein-Q8 16")));
}

#[test]
fn field_description() {
    let v = json(&moufang(&["field", "--field", "3^2", "--json"]));
    assert_eq!(v["values"]["modulus"], serde_json::json!([1, 0, 1]));
    assert_eq!(v["passed"], true);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(moufang(&["nonsense"]).status.code(), Some(2));
    assert_eq!(moufang(&["field", "--field", "4"]).status.code(), Some(2));
    assert_eq!(moufang(&["field", "--field", "x^y"]).status.code(), Some(2));
    assert_eq!(
        moufang(&["loop", "check", "--table", "/does/not/exist"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        moufang(&["corpus", "emit", "--name", "Z0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        moufang(&["paige", "build", "--field", "3", "--max-order", "1000"])
            .status
            .code(),
        Some(2)
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "order 2\n0 1\n1 1\n").unwrap();
    let out = moufang(&["loop", "check", "--table", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn verify_all_subset() {
    let out = moufang(&["verify-all", "--only", "9,13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("PASS criterion 9"));
    let v = json(&moufang(&["verify-all", "--only", "99", "--json"]));
    assert_eq!(v["passed"], false);
}
