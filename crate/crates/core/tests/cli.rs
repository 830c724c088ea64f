//! End-to-end runs of the `geronimus` binary.

use std::process::{Command, Output};

use serde_json::Value;

use geronimus::tables::TableId;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geronimus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(str::to_string).collect();
    let rows = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn tables_check_against_printed_values() {
    for id in ["1", "2"] {
        let o = run(&["table", id, "--check"]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let (header, rows) = csv_rows(&stdout(&o));
        assert_eq!(header[0], "N");
        assert_eq!(header.last().unwrap(), "z");
        assert_eq!(rows.len(), 5);
    }
}

#[test]
fn table_json_has_mass_zeros_and_root() {
    let o = run(&["table", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    for r in rows {
        assert!(r["N"].is_number());
        assert_eq!(r["zeros"].as_array().unwrap().len(), 3);
        assert!(r["z"].is_number());
    }
}

#[test]
fn table_written_to_file() {
    let path = std::env::temp_dir().join(format!("geronimus-table-{}.csv", std::process::id()));
    let o = run(&["table", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let (_, rows) = csv_rows(&std::fs::read_to_string(&path).unwrap());
    std::fs::remove_file(&path).ok();
    assert_eq!(rows.len(), 5);
}

#[test]
fn logarithmic_sweep_is_monotone() {
    let o = run(&[
        "sweep", "--measure", "laguerre", "--alpha", "0", "--c", "-1", "--n", "3", "--N-logrange", "1e-4,1e4,17",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("monotone: pass"));
    let (header, rows) = csv_rows(&stdout(&o));
    assert_eq!(header.len(), 1 + 3 * 3);
    assert_eq!(rows.len(), 17);
    assert!((rows[0][0] - 1e-4).abs() < 1e-12 && (rows[16][0] - 1e4).abs() < 1e-6);
}

#[test]
fn jacobi_sweep_reproduces_printed_rows() {
    let id = TableId::Jacobi;
    let masses: Vec<String> = id.masses().iter().map(|m| m.to_string()).collect();
    let o = run(&[
        "sweep",
        "--measure",
        "jacobi",
        "--alpha",
        "0.5",
        "--beta",
        "1",
        "--c",
        "-1.5",
        "--n",
        "4",
        "--N",
        &masses.join(","),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "geronimus/1");
    assert_eq!(v["monotone"], "pass");
    let zeros = v["zeros"].as_array().unwrap();
    for (row, printed) in zeros.iter().zip(id.printed()) {
        for (a, b) in row.as_array().unwrap().iter().zip(&printed.zeros) {
            assert!((a.as_f64().unwrap() - b).abs() < 5e-6);
        }
    }
}

#[test]
fn domain_errors_exit_with_usage_code() {
    let cases: [&[&str]; 5] = [
        &["sweep", "--measure", "laguerre", "--alpha", "-1.5", "--c", "-1", "--n", "3", "--N", "1"],
        &["sweep", "--measure", "laguerre", "--c", "0.5", "--n", "3", "--N", "1"],
        &["sweep", "--measure", "laguerre", "--c", "-1", "--n", "3", "--N", "-1"],
        &["table", "3"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn empty_mass_list_is_rejected() {
    let o = run(&["sweep", "--measure", "laguerre", "--c", "-1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("empty mass list"));
}

#[test]
fn oracle_suite_reports_no_failures() {
    let o = run(&["verify", "oracle"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "geronimus/1");
    assert_eq!(v["suite"], "oracle");
    assert!(v["cases"].as_u64().unwrap() > 0);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn figure_data_covers_the_window() {
    let o = run(&["figure", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = csv_rows(&stdout(&o));
    assert_eq!(&header[..2], ["x", "P"]);
    assert_eq!(header.len(), 2 + 5);
    assert_eq!(rows.len(), 600);
    assert_eq!(rows[0][0], -1.5);
    assert_eq!(rows[599][0], 7.0);
    assert!(rows.iter().all(|r| r.iter().all(|v| v.is_finite())));
}
