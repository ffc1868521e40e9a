use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use zlkb_core::reps::{homgamma_display, lkb_generator, m_tau0};

fn zlkb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zlkb")).args(args).env_remove("ZLKB_CHARGE_FILE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = zlkb(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

fn rows(v: &Value) -> Vec<Vec<String>> {
    serde_json::from_value(v["rows"].clone()).unwrap()
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn act_examples() {
    assert_eq!(
        ok(&["act", "--n", "3", "--word", "s1^-1", "--object", "P(1)", "--format", "text"]).trim(),
        "[1: P1<-2>]"
    );
    assert_eq!(ok(&["act", "--word", "", "--object", "P(2)", "--format", "text"]).trim(), "[0: P2<0>]");
    assert_eq!(ok(&["act", "--word", "s1,s1^-1", "--object", "P(2)", "--format", "text"]).trim(), "[0: P2<0>]");
    let v = json(&["act", "--n", "3", "--word", "s1^-1", "--object", "P(1)"]);
    assert_eq!(v["display"], "[1: P1<-2>]");
    assert!(v["complex"].is_object());
}

#[test]
fn matrix_examples() {
    let v = json(&["matrix", "--rep", "ptau", "--word", "garside^-1", "--n", "3"]);
    assert_eq!(rows(&v), homgamma_display(3).to_text_rows());
    assert_eq!(v["target_tau"], 0);
    let v = json(&["matrix", "--rep", "lkb", "--word", "s1", "--n", "2"]);
    assert_eq!(rows(&v), lkb_generator(2, 1, 1).unwrap().to_text_rows());
    assert_eq!(v["index"], serde_json::json!(["(1,2)", "(1,3)", "(2,3)"]));
    let v = json(&["matrix", "--rep", "m0", "--n", "3"]);
    assert_eq!(rows(&v), m_tau0(3).0.to_text_rows());
    for rep in ["perm", "burau"] {
        let v = json(&["matrix", "--rep", rep, "--word", "s1,s2^-1", "--n", "3"]);
        assert!(!rows(&v).is_empty());
    }
    let v = json(&["matrix", "--rep", "mk", "--k", "2", "--n", "3"]);
    assert_eq!(rows(&v).len(), 6);
    let csv = ok(&["matrix", "--rep", "m0", "--n", "2", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("row,(1,2),(1,3),(2,3)"));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn verify_examples() {
    let v = json(&["verify", "--suite", "homgamma", "--n", "3"]);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["identity"].as_str().is_some_and(|s| !s.is_empty())));
    json(&["verify", "--suite", "extriang", "--n", "2", "--samples", "100"]);
    let args = ["verify", "--suite", "identification", "--n", "2", "--random", "50", "--seed", "7"];
    let a = ok(&args);
    assert_eq!(a, ok(&args));
    let text = ok(&["verify", "--suite", "perm", "--n", "2", "--format", "text"]);
    assert!(text.trim_end().ends_with("0 failed"));
}

fn stables(v: &Value) -> Vec<(u64, u64, i64, i64)> {
    let mut out: Vec<_> = v["stables"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| {
            (
                s["root"][0].as_u64().unwrap(),
                s["root"][1].as_u64().unwrap(),
                s["k"].as_i64().unwrap(),
                s["l"].as_i64().unwrap(),
            )
        })
        .collect();
    out.sort();
    out
}

#[test]
fn hn_examples() {
    assert_eq!(stables(&json(&["hn", "--object", "P(1,3)"])), vec![(1, 3, 0, 0)]);
    assert_eq!(stables(&json(&["hn", "--object", "sum(P(1,2), shift(P(2,3),1,0))"])), vec![(1, 2, 0, 0), (2, 3, 1, 0)]);
    let v = json(&["hn", "--object", "act(s2, P(1,2))"]);
    assert_eq!(stables(&v), vec![(1, 2, 0, 0), (2, 3, -1, 1)]);
    assert_eq!(v["mass"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| zlkb(args).status.code();
    assert_eq!(code(&["act", "--object", "P(1"]), Some(2));
    assert_eq!(code(&["act", "--object", "P(9)"]), Some(2));
    assert_eq!(code(&["act", "--word", "s7", "--object", "P(1)"]), Some(2));
    assert_eq!(code(&["verify", "--suite", "nope"]), Some(2));
    assert_eq!(code(&["--n", "1", "matrix", "--rep", "lkb"]), Some(2));
    assert_eq!(code(&["hn", "--object", "P(1)", "--format", "csv"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
    let err = String::from_utf8(zlkb(&["act", "--object", "P(1"]).stderr).unwrap();
    assert!(err.contains("at 3"), "{err}");
}

#[test]
fn charge_files() {
    let good = temp_file("charges_n2.json", r#"{"n": 2, "vectors": [[1, 4], ["3/2", "1/2"]]}"#);
    let bad = temp_file("charges_bad.json", r#"{"n": 2, "vectors": [[1, 1], [1, 1]]}"#);
    let wrong_n = temp_file("charges_n3.json", r#"{"n": 3, "vectors": [[1, 9], [2, 4], [3, 1]]}"#);
    let obj = ["hn", "--object", "act(s2, P(1,2))"];
    let base = stables(&json(&obj));
    fn with<'a>(obj: &[&'a str], p: &'a Path) -> Vec<&'a str> {
        [obj, &["--charge-file", p.to_str().unwrap()]].concat()
    }
    assert_eq!(stables(&json(&with(&obj, &good))), base);
    assert_eq!(zlkb(&with(&obj, &bad)).status.code(), Some(2));
    assert_eq!(zlkb(&with(&obj, &wrong_n)).status.code(), Some(2));
    let via_env = |p: &PathBuf, extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_zlkb"))
            .args([&obj[..], extra].concat())
            .env("ZLKB_CHARGE_FILE", p)
            .output()
            .unwrap()
    };
    assert_eq!(via_env(&bad, &[]).status.code(), Some(2));
    let o = via_env(&good, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stables(&serde_json::from_str(&stdout(&o)).unwrap()), base);
    assert_eq!(via_env(&bad, &["--charge-file", good.to_str().unwrap()]).status.code(), Some(0));
}
