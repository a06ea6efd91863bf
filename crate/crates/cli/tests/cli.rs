use std::process::{Command, Output};

use serde_json::Value;

fn bicrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = bicrank(&full);
    (
        serde_json::from_slice(&o.stdout).unwrap(),
        o.status.code().unwrap(),
    )
}

#[test]
fn expand_lists() {
    assert_eq!(
        stdout(&bicrank(&["expand", "diff3", "--order", "5"])).trim(),
        "1,-4,2,10,-13,0"
    );
    assert_eq!(
        stdout(&bicrank(&["expand", "p2", "--order", "4"])).trim(),
        "1,2,5,10,20"
    );
    assert_eq!(
        stdout(&bicrank(&["expand", "diff2", "--order", "0"])).trim(),
        "1"
    );
    assert_eq!(
        stdout(&bicrank(&["expand", "diff4", "--order", "4"])).trim(),
        "1,-4,3,4,0"
    );
}

#[test]
fn expand_csv_and_classes() {
    let out = stdout(&bicrank(&[
        "expand", "diff2", "--order", "2", "--format", "csv",
    ]));
    assert_eq!(out, "exponent,coefficient\n0,1\n1,-2\n2,1\n");
    let out = stdout(&bicrank(&[
        "expand",
        "classes",
        "--order",
        "2",
        "--modulus",
        "5",
        "--format",
        "csv",
    ]));
    assert_eq!(
        out,
        "n,class_0,class_1,class_2,class_3,class_4\n0,1,0,0,0,0\n1,-2,1,1,1,1\n2,1,1,1,1,1\n"
    );
    let out = stdout(&bicrank(&[
        "expand", "table", "--order", "1", "--format", "csv",
    ]));
    assert!(out.starts_with("n,m,count\n0,0,1\n1,-2,1\n"));
}

#[test]
fn json_report_shape() {
    let (v, code) = json(&["verify", "t2", "--order", "300"]);
    assert_eq!(code, 0);
    for key in ["schema", "command", "config", "columns", "rows", "summary"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["command"], "verify t2");
    assert_eq!(v["config"]["order"], 300);
    assert_eq!(v["summary"]["exceptions_found"], serde_json::json!([5]));
    assert_eq!(v["rows"][0]["coefficient"], "0");
}

#[test]
fn sign_suites() {
    let (v, code) = json(&["verify", "t1", "--order", "5000"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["exceptions_found"], serde_json::json!([]));

    let (v, code) = json(&["verify", "t2"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["order"], 2000);

    // The coefficient at 56 is zero, which the listed exceptions omit.
    let (v, code) = json(&["verify", "t4", "--order", "5000"]);
    assert_eq!(code, 1);
    assert_eq!(
        v["summary"]["exceptions_found"],
        serde_json::json!([4, 20, 56])
    );
    assert_eq!(v["summary"]["unexpected"], serde_json::json!([56]));

    let (v, code) = json(&["verify", "t4", "--order", "50"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["exceptions_found"], serde_json::json!([4, 20]));
}

#[test]
fn mod5_and_identities() {
    let (v, code) = json(&["verify", "mod5"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["table_order"], 304);
    let (v, code) = json(&["verify", "identities", "--order", "200"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["failed"], serde_json::json!([]));
}

#[test]
fn asymptotic_suites() {
    let (v, code) = json(&["verify", "asy3", "--range", "1", "1200"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["checked"], 1200);
    let (v, code) = json(&["verify", "asy5"]);
    assert_eq!(code, 0);
    assert_eq!(v["config"]["range"], serde_json::json!([1, 1200]));
    assert_eq!(v["rows"][0]["verdict"], "yes");
}

#[test]
fn threshold_scans() {
    let (v, code) = json(&["threshold", "--modulus", "3", "--range", "100", "3000"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["holds_from_threshold"], true);
    assert_eq!(v["summary"]["stable_from"], 108);

    let (v, code) = json(&["threshold", "--modulus", "4", "--range", "2000", "6000"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["stable_from"], 2113);

    let (v, code) = json(&["threshold", "--modulus", "3", "--range", "1", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["nondominant"], 10);
    assert_eq!(v["summary"]["stable_from"], Value::Null);
}

#[test]
fn identical_runs_write_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = bicrank(&[
            "verify",
            "asy5",
            "--range",
            "1",
            "300",
            "--output",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!x.is_empty());
    assert_eq!(x, y);
}

#[test]
fn usage_errors() {
    assert_eq!(bicrank(&["expand", "nope"]).status.code(), Some(2));
    assert_eq!(
        bicrank(&["expand", "classes", "--order", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bicrank(&["verify", "t1", "--format", "list"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bicrank(&["verify", "asy3", "--range", "5", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bicrank(&["threshold", "--modulus", "2", "--range", "1", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bicrank(&["verify", "t1", "--precision", "32"])
            .status
            .code(),
        Some(2)
    );
    let o = bicrank(&["expand", "p2", "--output", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot write"));
}
