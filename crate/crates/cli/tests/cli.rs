use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn qsync(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsync"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = qsync(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_kind(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn cosets_for_q17_n5_list_the_odd_pairs() {
    let v = json_ok(&["cosets", "--q", "17", "--n", "5"]);
    assert_eq!(v["meta"]["z"], 4);
    assert_eq!(v["meta"]["c"], 1);
    let odd: BTreeSet<Vec<u64>> = v["result"]["cosets"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["rep"].as_u64().unwrap() % 2 == 1)
        .map(|c| serde_json::from_value(c["elements"].clone()).unwrap())
        .collect();
    let expected: BTreeSet<Vec<u64>> = [
        [1, 17],
        [15, 31],
        [3, 19],
        [13, 29],
        [9, 25],
        [7, 23],
        [11, 27],
        [5, 21],
    ]
    .iter()
    .map(|p| p.to_vec())
    .collect();
    assert_eq!(odd, expected);
    assert!(v["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn qsc_example_report() {
    let v = json_ok(&[
        "qsc", "--q", "41", "--n", "4", "--delta1", "1", "--extra", "6", "--cl", "0", "--cr", "15",
    ]);
    let r = &v["result"]["report"];
    assert_eq!(r["code_a"]["notation"], "[16,9,6]_41");
    assert_eq!(r["code_b"]["notation"], "[16,12,4]_41");
    assert_eq!(r["f_roots"], serde_json::json!([1, 6, 9]));
    assert_eq!(r["ord_f"], 16);
    assert_eq!(r["qsc"]["notation"], "(0,15)-[[31,2]]_41");
    assert_eq!(r["qsc"]["bit_floor"], 1);
    assert_eq!(r["qsc"]["phase_floor"], 2);
    assert!(v["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn verify_paper_passes_with_flagged_rows() {
    let v = json_ok(&["verify-paper"]);
    let checks = v["result"]["checks"].as_array().unwrap();
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(
        ids,
        [
            "table1-row1",
            "table1-row2",
            "table1-row3",
            "table2-row1",
            "table2-row2",
            "table2-row3",
            "example1",
            "example2"
        ]
    );
    for c in checks {
        let status = c["status"].as_str().unwrap();
        match c["id"].as_str().unwrap() {
            "table1-row2" | "table1-row3" | "table2-row3" => assert_eq!(status, "mismatch-flagged"),
            _ => assert_eq!(status, "match", "{c}"),
        }
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify-paper"],
        vec!["factor", "--q", "13", "--n", "4"],
        vec!["sweep", "--q", "41", "--n", "4", "--format", "csv"],
    ] {
        let a = qsync(&args);
        let b = qsync(&args);
        assert_eq!(a.stdout, b.stdout);
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn scenario_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    std::fs::write(&path, r#"{"q": 41, "n": 4, "delta1": 1, "extra": [6], "eps": [0], "cl": 3, "cr": 4, "budget": 0}"#)
        .unwrap();
    let p = path.to_str().unwrap();
    let v = json_ok(&["qsc", "--scenario", p]);
    assert_eq!(
        v["result"]["report"]["qsc"]["notation"],
        "(3,4)-[[23,2]]_41"
    );
    assert_eq!(
        v["result"]["report"]["code_a"]["distance"]["kind"],
        "lower_bound"
    );
    let v = json_ok(&["qsc", "--scenario", p, "--cr", "0"]);
    assert_eq!(
        v["result"]["report"]["qsc"]["notation"],
        "(3,0)-[[19,2]]_41"
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cosets.csv");
    let out = qsync(&[
        "cosets",
        "--q",
        "5",
        "--n",
        "3",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("rep,size,level,elements,negation,self_paired\n"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn precondition_failures_exit_one() {
    let out = qsync(&["cosets", "--q", "7", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "q_not_one_mod_four");

    let out = qsync(&[
        "qsc", "--q", "41", "--n", "4", "--extra", "6", "--cl", "8", "--cr", "8", "--budget", "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "tolerance");

    let out = qsync(&[
        "augment",
        "--q",
        "5",
        "--n",
        "3",
        "--cosets-a",
        "1,7",
        "--cosets-b",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "invalid_selection");

    let out = qsync(&["qsc", "--q", "41", "--n", "4", "--extra", "6,10"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "invalid_config");

    let out = qsync(&["code", "--q", "5", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "usage");
}

#[test]
fn malformed_scenario_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"q": 41, "unknown": 1}"#).unwrap();
    let out = qsync(&["cosets", "--scenario", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "malformed_scenario");
}

#[test]
fn sweep_reports_dimensions_and_tolerance() {
    let v = json_ok(&["sweep", "--q", "17", "--n", "5", "--max-delta1", "2"]);
    let point = &v["result"]["points"][0];
    assert!(point["invalid"].is_null());
    for e in point["entries"].as_array().unwrap() {
        let d = e["config"]["delta1"].as_i64().unwrap();
        assert_eq!(e["report"]["qsc"]["logical"].as_i64().unwrap(), 8 - 2 * d);
        assert_eq!(e["report"]["ord_f"], 32);
        assert_eq!(e["report"]["verified"], true);
    }
    let s = &v["result"]["summary"];
    assert_eq!(s["reports"], s["maximal_tolerance"]);

    let v = json_ok(&["sweep", "--q", "5", "--n", "4"]);
    assert_eq!(v["result"]["summary"]["invalid_points"], 1);
    let v = json_ok(&["sweep"]);
    assert_eq!(v["result"]["points"], serde_json::json!([]));
}

#[test]
fn dual_and_mindist() {
    let v = json_ok(&["dual", "--q", "5", "--n", "3", "--cosets", "1,2"]);
    assert_eq!(v["result"]["dual"]["params"]["notation"], "[8,3,4]_5");
    let v = json_ok(&["mindist", "--q", "5", "--n", "3", "--cosets", "1,3,6"]);
    assert_eq!(v["result"]["distance"]["exact"], 4);
    assert_eq!(v["result"]["distance"]["oracle"], 4);
}
