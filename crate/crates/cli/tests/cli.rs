use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn d5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_d5"))
        .args(args)
        .current_dir(golden(""))
        .output()
        .expect("d5 runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn check(args: &[&str], expected_file: &str, code: i32) {
    let out = d5(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let expected = std::fs::read_to_string(golden(expected_file)).unwrap();
    assert_eq!(stdout(&out), expected, "{args:?}");
}

fn json_out(args: &[&str]) -> (Value, Option<i32>) {
    let out = d5(args);
    (
        serde_json::from_str(&stdout(&out)).unwrap(),
        out.status.code(),
    )
}

#[test]
fn classify_golden() {
    check(&["classify", "pencil_diag.json"], "classify_diag.json", 0);
}

#[test]
fn classify_inline_identity_pencil_is_degenerate() {
    let i4 = r#"[["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]"#;
    let out = d5(&["classify", "--X", i4, "--Y", i4]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        stdout(&out),
        "{\"reason\":\"MultipleRoot\",\"verdict\":\"Degenerate\"}\n"
    );
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let truncated = dir.path().join("truncated.json");
    let full = std::fs::read_to_string(golden("pencil_diag.json")).unwrap();
    std::fs::write(&truncated, &full[..40]).unwrap();
    let out = d5(&["classify", truncated.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert!(out.stdout.is_empty());

    let asym = dir.path().join("asym.json");
    std::fs::write(&asym, full.replacen("\"0\"", "\"5\"", 1)).unwrap();
    assert_eq!(
        d5(&["classify", asym.to_str().unwrap()]).status.code(),
        Some(2)
    );

    for args in [
        &["slice", "--p", "x", "--q", "0"][..],
        &["slice", "--p", "1/0", "--q", "0"],
        &["t1", "--p", "1", "--q", "1", "--bound", "2"],
        &["solve-j", "--target", "abc"],
        &["sweep", "--grid", "0:1"],
        &["jinv", "--charpoly", "1,2,3"],
        &["bw", "--m", "0"],
        &["classify", "missing-file.json"],
    ] {
        assert_eq!(d5(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn slice_golden() {
    check(
        &["slice", "--p", "1", "--q", "-1", "--emit", "j"],
        "slice_j.json",
        0,
    );
    check(
        &["slice", "--p", "1/2", "--q", "1/2", "--emit", "j"],
        "slice_quarter.json",
        1,
    );
    check(&["slice", "--p", "inf", "--q", "0"], "slice_inf.json", 1);
    check(&["slice", "--p", "2", "--q", "1/3"], "slice_all.json", 0);
}

#[test]
fn slice_j_agrees_with_classify_of_emitted_pencil() {
    let (v, _) = json_out(&["slice", "--p", "-3/2", "--q", "2/7"]);
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("pencil.json");
    std::fs::write(&f, v["pencil"].to_string()).unwrap();
    let (c, code) = json_out(&["classify", f.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert_eq!(c["j"], v["j"]);
}

#[test]
fn deform_golden_and_zero_point() {
    check(
        &[
            "deform",
            "--p",
            "2",
            "--q",
            "1/3",
            "--point",
            r#"{"alpha":"1","mu":"-1/2"}"#,
        ],
        "deform_point.json",
        0,
    );
    check(&["deform", "deform_request.json"], "deform_point.json", 0);
    let (h, _) = json_out(&["deform", "--p", "2", "--q", "1/3"]);
    let (s, _) = json_out(&["slice", "--p", "2", "--q", "1/3", "--emit", "equations"]);
    assert_eq!(h["h1"], s["g1"]);
    assert_eq!(h["h2"], s["g2"]);
    let out = d5(&["deform", "--p", "1/2", "--q", "1/2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn t1_and_bw_golden() {
    check(&["t1", "--p", "1", "--q", "1"], "t1_1_1.json", 0);
    check(&["bw", "--m", "2"], "bw_2.json", 0);
    let out = d5(&["t1", "--p", "0", "--q", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn jinv_spot_values() {
    for cp in ["6,11,6,0", "0,-10,0,9"] {
        let (v, code) = json_out(&["jinv", "--charpoly", cp]);
        assert_eq!(code, Some(0));
        assert_eq!(v["j"], "35152/9");
        let re = v["j_cross_ratio"]["re"].as_f64().unwrap();
        assert!((re - 35152.0 / 9.0).abs() < 1e-8 * 35152.0 / 9.0);
    }
    let (v, code) = json_out(&["jinv", "--charpoly", "4,6,4,1"]);
    assert_eq!(code, Some(1));
    assert_eq!(v["degenerate"], true);
}

#[test]
fn solve_j_round_trip() {
    let (v, code) = json_out(&["solve-j", "--target", r#"{"re": 2048.5, "im": -3}"#]);
    assert_eq!(code, Some(0));
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 6);
    for r in roots {
        assert!(r["relative_error"].as_f64().unwrap() <= 1e-8);
    }
}

#[test]
fn sweep_golden_and_file_output() {
    check(&["sweep", "--grid", "-1:1:3,0:1/2:3"], "sweep.csv", 0);
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("out.csv");
    let (v, code) = json_out(&[
        "sweep",
        "--grid",
        "-1:1:3,0:1/2:3",
        "--out",
        f.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(0));
    assert_eq!(v["rows"], 3);
    assert_eq!(v["skipped"], 6);
    let expected = std::fs::read_to_string(golden("sweep.csv")).unwrap();
    assert_eq!(std::fs::read_to_string(f).unwrap(), expected);
}

#[test]
fn output_is_deterministic() {
    let args = ["sweep", "--grid", "-2:3:9,-1:2:7"];
    let first = stdout(&d5(&args));
    for _ in 0..3 {
        assert_eq!(stdout(&d5(&args)), first);
    }
    let a = stdout(&d5(&["slice", "--p", "5/3", "--q", "-7"]));
    assert_eq!(a, stdout(&d5(&["slice", "--p", "5/3", "--q", "-7"])));
}
