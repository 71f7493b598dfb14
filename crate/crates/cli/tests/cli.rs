use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn prelie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prelie")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("prelie-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn build_i3_over_gf5() {
    let out = prelie(&["build", "--family", "in", "--n", "3", "--field", "gf5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["field"], json!({"kind": "prime", "p": 5}));
    let table = v["table"].as_array().unwrap();
    assert_eq!(table.len(), 5);
    for entry in [json!([3, 3, 3, "2"]), json!([3, 1, 1, "1"]), json!([1, 1, 3, "1"])] {
        assert!(table.contains(&entry));
    }
}

#[test]
fn build_other_families() {
    let v = json_of(&prelie(&["build", "--family", "un", "--n", "2"]));
    assert_eq!(v["dim"], 3);
    assert_eq!(v["first_row"].as_array().unwrap().len(), 2);
    let v = json_of(&prelie(&["build", "--family", "ex1", "--n", "3", "--a", "1,1,0"]));
    assert_eq!(v["dim"], 3);
    let v = json_of(&prelie(&["build", "--family", "iinf", "--n", "2", "--field", "qi"]));
    assert_eq!(v["dim"], 3);
    assert_eq!(v["field"]["kind"], "quadratic");
}

#[test]
fn identities_of_built_algebra() {
    let out = prelie(&["check-identity", "--n", "3", "--identity", "pre_lie,novikov,third_power_associative"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results[0]["holds"], true);
    assert_eq!(results[2]["holds"], false);
    assert!(results[2]["witness"]["basis"].is_array());
}

#[test]
fn rb_verify_verdicts() {
    let case1 = temp_file("case1.json", r#"{"matrix": [["2","1"],["4","2"]], "weight": "1"}"#);
    let v = json_of(&prelie(&["rb-verify", "--n", "2", "--field", "gf5", "--op", case1.to_str().unwrap()]));
    assert_eq!(v["is_rb"], true);
    assert_eq!(v["case"], "1");
    assert_eq!(v["splitting"], true);
    assert_eq!(v["theorem2"], json!({"r2_plus_lr_zero": true, "ata_zero": true, "phi_ata_zero": true}));

    // not RB: verification succeeds, the verdict is negative
    let id = temp_file("id.json", r#"[[1, 0], [0, 1]]"#);
    let out = prelie(&["rb-verify", "--n", "2", "--field", "gf5", "--weight", "1", "--op", id.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["is_rb"], false);
    assert!(v["witness"]["basis"].is_array());
    assert_eq!(v["case"], Value::Null);

    let algebra = temp_file("i2.json", &String::from_utf8(prelie(&["build", "--n", "2", "--field", "gf5"]).stdout).unwrap());
    let v = json_of(&prelie(&["rb-verify", "--algebra", algebra.to_str().unwrap(), "--op", case1.to_str().unwrap()]));
    assert_eq!(v["is_rb"], true);
}

#[test]
fn enumeration_and_index() {
    let out_path = std::env::temp_dir().join(format!("prelie-cli-{}-ops.json", std::process::id()));
    let out = prelie(&["rb-enumerate", "--n", "2", "--field", "gf3", "--weight", "all", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    let counts: Vec<_> = v["results"].as_array().unwrap().iter().map(|r| r["count"].clone()).collect();
    assert_eq!(counts.len(), 3);
    assert_eq!(counts[1], 2);
    assert_eq!(counts[2], 2);

    let v = json_of(&prelie(&["rb-index", "--n", "2", "--field", "gf5", "--weight", "1"]));
    assert_eq!(v["results"][0]["index"], 2);
    let v = json_of(&prelie(&["rb-index", "--n", "2", "--field", "gf3"]));
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["index"] == 1));
}

#[test]
fn worker_count_does_not_change_output() {
    let one = prelie(&["rb-enumerate", "--n", "3", "--field", "gf3", "--weight", "1", "--workers", "1"]);
    let many = prelie(&["rb-enumerate", "--n", "3", "--field", "gf3", "--weight", "1", "--workers", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn symmetry_commands() {
    let v = json_of(&prelie(&["derivations", "--n", "4", "--field", "gf5"]));
    assert_eq!(v["dim"], 3);
    let v = json_of(&prelie(&["automorphisms", "--n", "2", "--field", "gf3"]));
    assert_eq!(v["count"], 2);
    let flip = temp_file("flip.json", r#"[[1, 0], [0, -1]]"#);
    let v = json_of(&prelie(&["automorphisms", "--n", "2", "--field", "gf3", "--candidate", flip.to_str().unwrap()]));
    assert_eq!(v["candidate"]["is_automorphism"], false);
    assert_eq!(v["candidate"]["residuals_zero"], false);
    assert!(v.get("count").is_none());
}

#[test]
fn simplicity_of_a_file_algebra() {
    // I_2^(+) over GF(9): 1/2 = 2
    let plus = temp_file(
        "plus.json",
        r#"{"field": "gf9", "dim": 2, "table": [[1,1,2,"1"],[1,2,1,"2"],[2,1,1,"2"],[2,2,2,"2"]]}"#,
    );
    let out = prelie(&["simplicity", "--algebra", plus.to_str().unwrap()]);
    // the descriptor must be a JSON object inside an algebra file
    assert_eq!(out.status.code(), Some(2));
    let plus = temp_file(
        "plus2.json",
        r#"{"field": {"kind":"quadratic","base":{"kind":"prime","p":3},"d":"2"}, "dim": 2,
            "table": [[1,1,2,"1"],[1,2,1,"2"],[2,1,1,"2"],[2,2,2,"2"]]}"#,
    );
    let out = prelie(&["simplicity", "--algebra", plus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["simple"], false);
    assert_eq!(v["witness"]["ambient_dim"], 2);
    let v = json_of(&prelie(&["simplicity", "--n", "3", "--field", "gf2"]));
    assert_eq!(v["simple"], true);
}

#[test]
fn decompositions() {
    let v = json_of(&prelie(&["decompose", "--n", "2", "--field", "gf5"]));
    assert_eq!(v["count"], 8);
    let both = v["decompositions"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|d| d["normal_form"]["kind"] == "both_lagrangian")
        .count();
    assert_eq!(both, 2);
    let op = temp_file("split.json", r#"[["0","0"],["2","4"]]"#);
    let v = json_of(&prelie(&["decompose", "--n", "2", "--field", "gf5", "--weight", "1", "--op", op.to_str().unwrap()]));
    assert_eq!(v["reproduces_operator"], true);
}

#[test]
fn verify_theorems_suites() {
    let out = prelie(&["verify-theorems", "--suite", "examples"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["suite"], "examples");
    let out = prelie(&["verify-theorems", "--suite", "t1", "--max-n", "4", "--fields", "q,gf5", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["seed"], 9);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["frobnicate"],
        vec!["build"],
        vec!["build", "--n", "2", "--field", "gf4"],
        vec!["build", "--n", "2", "--family", "xyz"],
        vec!["rb-enumerate", "--n", "2", "--field", "q"],
        vec!["rb-enumerate", "--n", "3", "--field", "gf5", "--cap", "1000"],
        vec!["verify-theorems", "--suite", "t9"],
        vec!["rb-verify", "--n", "2", "--op", "/nonexistent/op.json"],
    ] {
        let out = prelie(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let bad = temp_file("bad.json", "[[1, 2], [3");
    assert_eq!(prelie(&["rb-verify", "--n", "2", "--op", bad.to_str().unwrap()]).status.code(), Some(2));
    let wrong_size = temp_file("wrong.json", "[[1, 0, 0], [0, 1, 0], [0, 0, 1]]");
    assert_eq!(prelie(&["rb-verify", "--n", "2", "--op", wrong_size.to_str().unwrap()]).status.code(), Some(2));
}
