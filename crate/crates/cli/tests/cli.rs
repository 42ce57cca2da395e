use std::path::PathBuf;
use std::process::{Command, Output};

use mtc_core::dataio::{parse_spectrum, write_file_string};
use serde_json::Value;

fn mtc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtc"))
        .args(args)
        .env_remove("MTC_ORDER_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn validate_catalog_entries() {
    for name in ["vec", "semion", "toric-code", "fibonacci", "haagerup-center"] {
        let o = mtc(&["validate", &format!("catalog:{name}")]);
        assert_eq!(o.status.code(), Some(0), "{name}");
    }
}

#[test]
fn haagerup_report_matches_golden() {
    let o = mtc(&["report", "catalog:haagerup-center", "--braid-sigma", "--object", "x6", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("haagerup_sigma_x6.json"));
    let report = parse_spectrum(&stdout(&o)).unwrap();
    assert_eq!(report.rows.len(), 12);
}

#[test]
fn object_selection_by_index_and_label_agree() {
    let by_label = mtc(&["report", "catalog:haagerup-center", "--braid-sigma", "--object", "x6"]);
    let by_index = mtc(&["report", "catalog:haagerup-center", "--braid-sigma", "--object", "6"]);
    assert_eq!(stdout(&by_label), stdout(&by_index));
    assert!(stdout(&by_label).starts_with("x6 (x) x6 = x1 + 2x2 + x3"));
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &["rotation", "catalog:fibonacci", "--object", "tau", "--n", "4"],
        &["indicators", "catalog:toric-code", "--n", "3", "--k", "2", "--format", "structured"],
        &["braid", "catalog:semion", "--object", "s", "--n", "3", "--l", "1", "--under"],
        &["fusion", "catalog:haagerup-center", "--object", "x7"],
    ];
    for args in cases {
        let first = mtc(args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&first), stdout(&mtc(args)), "{args:?}");
    }
}

#[test]
fn toric_code_braid_has_one_eigenvalue_per_hom_space() {
    let o = mtc(&["braid", "catalog:toric-code", "--object", "e", "--n", "2", "--l", "0", "--m", "0", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let report = parse_spectrum(&stdout(&o)).unwrap();
    for row in &report.rows {
        let nonzero = row.entries.iter().filter(|e| e.multiplicity > 0).count();
        assert_eq!(nonzero as u64, row.hom_dim.min(1), "{}", row.label);
    }
}

#[test]
fn structured_outputs_follow_their_schemas() {
    let v: Value = serde_json::from_str(&stdout(&mtc(&["validate", "catalog:fibonacci", "--format", "structured"]))).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["invariants"]["conductor"], 5);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == Value::Bool(true)));

    let v: Value = serde_json::from_str(&stdout(&mtc(&["fusion", "catalog:fibonacci", "--object", "tau", "--with", "tau", "--format", "structured"]))).unwrap();
    let terms = v[0]["decomposition"].as_array().unwrap();
    assert_eq!(terms.len(), 2);

    let v: Value = serde_json::from_str(&stdout(&mtc(&["indicators", "catalog:semion", "--n", "2", "--format", "structured"]))).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert_eq!(v["values"][0][1], "-1");

    for args in [
        &["rotation", "catalog:semion", "--object", "s", "--n", "2", "--format", "structured"][..],
        &["braid", "catalog:fibonacci", "--object", "tau", "--n", "3", "--l", "1", "--format", "structured"][..],
    ] {
        let report = parse_spectrum(&stdout(&mtc(args))).unwrap();
        assert!(!report.rows.is_empty());
    }
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fib.txt");
    let o = mtc(&["fusion", "catalog:fibonacci", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("tau (x) tau = 1 + tau"));
}

#[test]
fn files_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("semion.mtc");
    std::fs::write(&path, write_file_string(&mtc_core::dataio::catalog("semion").unwrap())).unwrap();
    let from_file = mtc(&["rotation", path.to_str().unwrap(), "--object", "s", "--n", "2"]);
    let from_catalog = mtc(&["rotation", "catalog:semion", "--object", "s", "--n", "2"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&from_catalog));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // A T-matrix that breaks (ST)^3 = xi S^2.
    let bad = dir.path().join("bad.mtc");
    std::fs::write(&bad, "rank = 2\nS = [[\"1/2*E(8) - 1/2*E(8)^3\", \"1/2*E(8) - 1/2*E(8)^3\"], [\"1/2*E(8) - 1/2*E(8)^3\", \"-1/2*E(8) + 1/2*E(8)^3\"]]\nT = [\"1\", \"E(3)\"]\n").unwrap();
    let o = mtc(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    assert_eq!(mtc(&["fusion", bad.to_str().unwrap()]).status.code(), Some(1));

    let garbled = dir.path().join("garbled.mtc");
    std::fs::write(&garbled, "rank = 1\nS = [[\"1 +\"]]\nT = [\"1\"]\n").unwrap();
    let o = mtc(&["validate", garbled.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("S[1][1]"));

    assert_eq!(mtc(&["validate", "catalog:nope"]).status.code(), Some(2));
    assert_eq!(mtc(&["braid", "catalog:semion", "--object", "s", "--n", "2", "--l", "2"]).status.code(), Some(2));
    assert_eq!(mtc(&["rotation", "catalog:semion", "--object", "q", "--n", "2"]).status.code(), Some(2));
    assert_eq!(mtc(&["report", "catalog:semion", "--object", "s"]).status.code(), Some(2));
    assert_eq!(mtc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(mtc(&["--help"]).status.code(), Some(0));

    let capped = Command::new(env!("CARGO_BIN_EXE_mtc"))
        .args(["validate", "catalog:haagerup-center"])
        .env("MTC_ORDER_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn ising_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ising.mtc");
    std::fs::write(
        &path,
        "rank = 3\nS = [[\"1/2\", \"1/2\", \"1/2*E(8) - 1/2*E(8)^3\"], [\"1/2\", \"1/2\", \"-1/2*E(8) + 1/2*E(8)^3\"], [\"1/2*E(8) - 1/2*E(8)^3\", \"-1/2*E(8) + 1/2*E(8)^3\", \"0\"]]\nT = [\"1\", \"-1\", \"E(16)\"]\n",
    )
    .unwrap();
    let v = mtc(&["validate", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
    assert!(stdout(&v).contains("central charge: E(16)"));
    let f = mtc(&["fusion", path.to_str().unwrap(), "--object", "3", "--with", "3"]);
    assert_eq!(stdout(&f), "x3 (x) x3 = x1 + x2\n");
}
