use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl2chars"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn eval_examples() {
    assert_eq!(
        stdout(&["eval", "eps4", "--mod", "4", "--matrix", "1,1,0,1"]).trim(),
        "1/4 (i)"
    );
    assert_eq!(
        stdout(&["eval", "eps3", "--mod", "3", "--matrix", "1,1,0,1"]).trim(),
        "1/3"
    );
    assert_eq!(
        stdout(&["eval", "eps2", "--mod", "2", "--matrix", "1,1,0,1"]).trim(),
        "1/2 (-1)"
    );
    assert_eq!(
        stdout(&["eval", "eps2", "--dual", "--matrix", "1+a,0,0,1+a"]).trim(),
        "0/1 (1)"
    );
    let v = json(&[
        "eval", "eps4", "--mod", "4", "--matrix", "0,-1,1,0", "--json",
    ]);
    assert_eq!(v["value"], "1/4");
    assert_eq!(v["ring"], "Z/4");
}

#[test]
fn eval_errors() {
    assert_eq!(
        code(&["eval", "eps3", "--mod", "3", "--matrix", "1,1,1,1"]),
        1
    );
    assert_eq!(
        code(&["eval", "eps4", "--mod", "4", "--matrix", "1,x,0,1"]),
        2
    );
    assert_eq!(
        code(&["eval", "eps4", "--mod", "4", "--matrix", "1,1,0"]),
        2
    );
    assert_eq!(
        code(&["eval", "eps9", "--mod", "4", "--matrix", "1,1,0,1"]),
        2
    );
    assert_eq!(code(&["eval", "eps4", "--matrix", "1,1,0,1"]), 2);
}

#[test]
fn verify_suites_pass() {
    for suite in ["formulas", "decompositions", "lemmas", "oracle-equivalence"] {
        let v = json(&["verify", suite, "--json"]);
        assert_eq!(v["suite"], suite);
        assert_eq!(v["passed"], v["total"], "{suite}: {v}");
        assert!(v["total"].as_u64().unwrap() > 0);
    }
    assert_eq!(code(&["verify", "nonsense"]), 2);
}

#[test]
fn verify_respects_group_cap() {
    assert_eq!(
        code(&[
            "verify",
            "oracle-equivalence",
            "--n",
            "12",
            "--max-group-size",
            "10"
        ]),
        2
    );
    let v = json(&["verify", "oracle-equivalence", "--n", "6", "--json"]);
    assert_eq!(v["passed"], v["total"]);
}

#[test]
fn reproduce_tables() {
    let out = stdout(&["reproduce", "1"]);
    assert!(out.trim_end().ends_with("18/18 match"), "{out}");
    let out = stdout(&["reproduce", "2"]);
    assert!(
        out.trim_end().ends_with("4/5 match, 1 flagged-unknown"),
        "{out}"
    );
    let out = stdout(&["reproduce", "3"]);
    assert!(out.trim_end().ends_with("2/2 match"), "{out}");
    assert_eq!(code(&["reproduce", "4"]), 2);
}

#[test]
fn reproduce_json_fields() {
    let v = json(&["reproduce", "2", "--json"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["key"], "2,0");
    assert_eq!(rows[0]["status"], "flagged-unknown");
    assert_eq!(rows[0]["order"], 144);
    assert_eq!(
        rows[4]["structure"],
        serde_json::json!([3, 3, 3, 3, 4, 4, 4, 4])
    );
    for r in rows {
        for field in [
            "poly",
            "a",
            "q4",
            "r4",
            "order",
            "structure",
            "split2",
            "split3",
            "status",
        ] {
            assert!(!r[field].is_null(), "missing {field} in {r}");
        }
    }
}

#[test]
fn reproduce_is_deterministic() {
    let a = stdout(&["reproduce", "1", "--tsv"]);
    let b = stdout(&["reproduce", "1", "--tsv"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 19);
}

#[test]
fn field_from_poly() {
    let v = json(&["field", "--poly", "-18,-1,1", "--json"]);
    assert_eq!(v[0]["order"], 144);
    assert_eq!(v[0]["structure"], serde_json::json!([3, 3, 4, 4]));
    assert_eq!(v[0]["status"], "-");
    assert!(v[0]["expected"].is_null());
    assert_eq!(code(&["field", "--poly", "-4,0,1"]), 1);
    assert_eq!(code(&["field", "--poly", "1,2"]), 1);
    assert_eq!(code(&["field", "--poly", "1,q"]), 2);
}

#[test]
fn field_from_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        file,
        "# two quadratics and a reducible one\n-1,-1,1 : 1\n-18,-1,1 : 3\n-4,0,1"
    )
    .unwrap();
    let out = run(&["field", file.path().to_str().unwrap(), "--tsv"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .map(|l| l.split('\t').collect())
        .collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].last(), Some(&"match"));
    assert_eq!(rows[1].last(), Some(&"mismatch"));
    assert!(rows[2].last().unwrap().starts_with("error"));
    assert_eq!(code(&["field", "/nonexistent/polys.txt"]), 2);
}

#[test]
fn unit_square_ideal() {
    let out = stdout(&["field", "--poly", "-1,-1,1", "--unit", "0,1"]);
    assert!(out.contains("norm 1, abelianization trivial"), "{out}");
    let out = stdout(&["field", "--poly", "-2,0,1", "--unit", "1,1"]);
    assert!(out.contains("norm 4, inconclusive"), "{out}");
    assert_eq!(code(&["field", "--poly", "-2,0,1", "--unit", "0,1"]), 1);
}

#[test]
fn split_reports_index() {
    let v = json(&["split", "--poly", "3,0,1", "-p", "2", "--json"]);
    assert_eq!(v["index_p_part"], "2");
    assert_eq!(v["dedekind_pmaximal"], false);
    assert_eq!(v["parts"], serde_json::json!([{"e": 1, "f": 2}]));
    let v = json(&[
        "split",
        "--poly",
        "-19,0,0,1",
        "-p",
        "3",
        "--via-order",
        "--json",
    ]);
    assert_eq!(
        v["parts"],
        serde_json::json!([{"e": 1, "f": 1}, {"e": 2, "f": 1}])
    );
    assert_eq!(code(&["split", "--poly", "3,0,1", "-p", "4"]), 2);
}
