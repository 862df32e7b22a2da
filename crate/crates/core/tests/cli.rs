use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], input: &Value) -> (i32, Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tropical-stiefel"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.to_string().as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    (out.status.code().unwrap(), serde_json::from_str(&text).unwrap_or(Value::Null))
}

fn zoom_matrix() -> Value {
    json!({"matrix": [[0, 0, 0, 0, 0], [1, 1, 1, 0, 0], ["inf", 0, 0, "inf", "inf"]]})
}

#[test]
fn pipeline_round_trips() {
    let (code, v) = run(&["stiefel"], &zoom_matrix());
    assert_eq!(code, 0);
    assert_eq!(v["entries"]["1,2,3"], json!("1"));
    assert_eq!(v["entries"]["1,4,5"], json!("inf"));

    for cmd in ["check-pluecker", "underlying", "cells", "vertices", "distinguished", "sample-presentation"] {
        let (code, out) = run(&[cmd], &v);
        assert_eq!(code, 0, "{cmd}: {out}");
    }
    let (_, dual) = run(&["dual"], &v);
    let (_, back) = run(&["dual"], &dual);
    assert_eq!(back, v);

    let (_, m) = run(&["underlying"], &v);
    let (code, t) = run(&["is-transversal-matroid"], &m);
    assert_eq!(code, 0, "{t}");
    assert_eq!(t["transversal"], json!(true));
    let (code, _) = run(&["dual"], &json!({"matroid": m}));
    assert_eq!(code, 0);

    let (_, d) = run(&["distinguished"], &v);
    assert!(d["apices"].as_array().unwrap().contains(&json!(["inf", "0", "0", "inf", "inf"])));

    let (_, s) = run(&["sample-presentation", "--seed", "5"], &v);
    let input = json!({"valuation": v, "points": s["points"]});
    assert_eq!(run(&["in-presentation-space"], &input).0, 0);
    assert_eq!(run(&["verify-presentation"], &input).0, 0);
    let (_, again) = run(&["stiefel"], &json!({"matrix": s["points"]}));
    assert_eq!(again, v);

    let (code, out) = run(&["membership"], &json!({"valuation": v, "point": [0, 1, 2, 3, 4]}));
    assert_eq!(code, 1);
    assert!(out["circuit"].is_array());
    let (code, c) = run(&["contract"], &json!({"valuation": v, "set": [1, 4, 5]}));
    assert_eq!(code, 0);
    assert_eq!(c["rank"], json!(1));
    let (code, _) = run(&["restrict"], &json!({"valuation": v, "set": [2, 3, 4]}));
    assert_eq!(code, 0);
    let (code, init) = run(&["initial"], &json!({"valuation": v, "point": [1, 1, 1, 0, 0]}));
    assert_eq!(code, 0);
    assert_eq!(run(&["underlying"], &json!({"valuation": {"n": 5, "rank": 3, "entries": {}, "sparse": true}})).0, 2);
    assert!(init["bases"].is_array());
}

#[test]
fn snowflake_and_gammoid_commands() {
    let matrix = json!([
        [0, "inf", 0, "inf", 0, "inf"],
        ["inf", "inf", "inf", 1, 0, 0],
        ["inf", "inf", 0, 0, 1, "inf"],
        [0, 0, 1, "inf", "inf", "inf"]
    ]);
    let (_, vd) = run(&["stiefel"], &json!({ "matrix": matrix }));
    let (_, v) = run(&["dual"], &vd);
    let (code, g) = run(
        &["digraph-from-presentation"],
        &json!({"points": matrix, "basis": [1, 2, 3, 5], "sigma": [1, 5, 3, 2]}),
    );
    assert_eq!(code, 0, "{g}");
    assert_eq!(g["sinks"], json!([4, 6]));
    let (code, gv) = run(&["gammoid"], &g);
    assert_eq!(code, 0);
    assert_eq!(gv, v);
    let (code, _) = run(&["stable-intersect"], &json!({"hyperplanes": matrix, "target": v}));
    assert_eq!(code, 0);
    let (code, si) = run(&["stable-intersect"], &json!({"hyperplanes": matrix}));
    assert_eq!((code, &si), (0, &v));
    let (code, sum) = run(&["stable-sum"], &json!({"left": v, "right": v}));
    assert_eq!(code, 0);
    assert_eq!(sum["rank"], json!(4));
    let (code, _) = run(&["stable-intersect"], &json!({"left": vd, "right": vd}));
    assert_eq!(code, 0);
    let bases: Vec<Value> = (1..=6)
        .flat_map(|i| (i + 1..=6).map(move |j| (i, j)))
        .filter(|&(i, j)| !(j == i + 1 && i % 2 == 1))
        .map(|(i, j)| json!([i, j]))
        .collect();
    let m = json!({"n": 6, "rank": 2, "bases": bases});
    let (code, cert) = run(&["is-transversal-matroid"], &m);
    assert_eq!(code, 1);
    assert_eq!(cert["family"], json!([[1, 2], [3, 4], [5, 6]]));
    let (code, _) = run(&["max-presentation"], &m);
    assert_eq!(code, 1);
    let (code, err) = run(&["sample-presentation"], &v);
    assert_eq!(code, 2);
    assert!(err["error"].is_string());
}

#[test]
fn set_presentations() {
    let m = json!({"n": 4, "rank": 2, "bases": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]]});
    let (code, p) = run(&["max-presentation"], &m);
    assert_eq!(code, 0);
    assert_eq!(p, json!({"sets": [[1, 2], [1, 2, 3, 4]]}));
    let input = json!({"matroid": m, "sets": p["sets"]});
    assert_eq!(run(&["verify-set-presentation"], &input).0, 0);
    let bad = json!({"matroid": m, "sets": [[1, 2], [1, 2]]});
    let (code, out) = run(&["verify-set-presentation"], &bad);
    assert_eq!(code, 1);
    assert!(out["violation"]["kind"].is_string());
}

#[test]
fn usage_and_input_errors() {
    let (code, out) = run(&["no-such-command"], &json!({}));
    assert_eq!(code, 2);
    assert!(out["error"].is_string());
    let mut child = Command::new(env!("CARGO_BIN_EXE_tropical-stiefel"))
        .arg("stiefel")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"{not json").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let (code, out) = run(&["stiefel"], &json!({"matrix": [["inf", "inf", 0], ["inf", "inf", 1]]}));
    assert_eq!(code, 2);
    assert_eq!(out["witness"], json!({"rows": [1, 2], "cols": [1, 2]}));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let (_, v) = run(&["stiefel"], &zoom_matrix());
    let one = run(&["cells", "--threads", "1", "--pretty"], &v);
    let many = run(&["cells", "--threads", "4"], &v);
    assert_eq!(one, many);
}
