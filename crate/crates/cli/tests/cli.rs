use std::process::{Command, Output};

use serde_json::{json, Value};

fn msym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = msym(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn g_schur_expansion_golden() {
    let v = stdout_json(&["expand", "--basis", "s", "--of", "g", "--label", "[2,1]"]);
    assert_eq!(v["coeffs"], json!({"[2,1]": 1, "[2]": 1}));
    assert_eq!(v["cap"], Value::Null);
    let v = stdout_json(&["expand", "--basis", "m", "--of", "g", "--label", "[2,1]"]);
    assert_eq!(v["coeffs"], json!({"[2,1]": 1, "[1,1,1]": 2, "[2]": 1, "[1,1]": 1}));
}

#[test]
fn mjh_golden_list_and_profile() {
    let v = stdout_json(&["mjh", "--shape", "[3,1]", "--length", "4"]);
    assert_eq!(v, json!(["2134", "2314", "2341"]));
    let v = stdout_json(&["mjh", "--shape", "[3,1]", "--length", "5", "--profile"]);
    assert_eq!(v, json!([2, 2, 2, 2]));
}

#[test]
fn ltilde_product_golden() {
    let v = stdout_json(&["product", "--basis", "Ltilde", "--left", "(1)", "--right", "(1)", "--cap", "3"]);
    assert_eq!(v["cap"], json!(3));
    assert_eq!(v["coeffs"], json!({"(2)": 1, "(1,1)": 1, "(1,2)": 1, "(2,1)": 1}));
}

#[test]
fn rtilde_product_golden() {
    let v = stdout_json(&["product", "--basis", "Rtilde", "--left", "(3,2,5,1)", "--right", "(4,2)"]);
    assert_eq!(
        v["coeffs"],
        json!({"(3,2,5,5,2)": 1, "(3,2,5,1,4,2)": 1, "(3,2,5,4,2)": 1})
    );
}

#[test]
fn pump_golden() {
    let v = stdout_json(&["pump", "--label", "(2,1)", "--i", "2"]);
    assert_eq!(v["coeffs"], json!({"(1,1,2,1)": 1, "(1,2,1,1)": 2, "(2,1,1,1)": 3}));
}

#[test]
fn pairings_are_diagonal() {
    let v = stdout_json(&["pair", "--left-basis", "g", "--right-basis", "G", "--left", "[2,1]", "--right", "[2,1]"]);
    assert_eq!(v["value"], json!(1));
    let v = stdout_json(&["pair", "--left-basis", "g", "--right-basis", "G", "--left", "[2,1]", "--right", "[2]"]);
    assert_eq!(v["value"], json!(0));
    let v = stdout_json(&["pair", "--left-basis", "Rtilde", "--right-basis", "Ltilde", "--left", "(2,1)", "--right", "(2,1)"]);
    assert_eq!(v["value"], json!(1));
    let v = stdout_json(&["pair", "--left-basis", "mMR", "--right-basis", "MMR", "--left", "121", "--right", "[(1,3),2]"]);
    assert_eq!(v["value"], json!(1));
}

#[test]
fn oracle_routes_agree() {
    let a = stdout_json(&["oracle", "--series", "set-valued", "--shape", "[2,1]", "--maxdeg", "4", "--route", "operators"]);
    let b = stdout_json(&["oracle", "--series", "set-valued", "--shape", "[2,1]", "--maxdeg", "4", "--route", "tableaux"]);
    assert_eq!(a["poly"], b["poly"]);
    assert_ne!(a["poly"]["terms"], json!({}));
    assert_eq!(a["route"], json!("operators"));
    assert_eq!(b["route"], json!("tableaux"));
}

#[test]
fn order_and_factor_and_antipode() {
    let v = stdout_json(&["order", "--left", "[1,2]", "--right", "[2,1]"]);
    assert_eq!(v["leq"], json!(true));
    assert_eq!(v["geq"], json!(false));

    let v = stdout_json(&["factor", "--basis", "mMR", "--label", "12"]);
    assert_eq!(v["factors"], json!(["1", "1"]));
    let v = stdout_json(&["factor", "--basis", "MMR", "--label", "[2,1]"]);
    assert_eq!(v["irreducible"], json!(true));

    let v = stdout_json(&["antipode", "--label", "[1]"]);
    assert_eq!(v["terms"], json!({"[1]": -1}));
}

#[test]
fn enumerate_counts() {
    let v = stdout_json(&["enumerate", "--kind", "ssyt", "--shape", "[2,1]", "--max-entry", "3"]);
    assert_eq!(v["count"], json!(8));
    let v = stdout_json(&["enumerate", "--kind", "Mperms", "--n", "3"]);
    assert_eq!(v["count"], json!(8));
    let v = stdout_json(&["enumerate", "--kind", "set-compositions", "--n", "2"]);
    assert_eq!(v["items"], json!(["[1,2]", "[2,1]", "[(1,2)]"]));
}

#[test]
fn verify_report_lists_checks() {
    let out = msym(&["verify", "--suite", "shapes", "--size", "small"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("pass")).count(), 3);
    assert!(text.contains("shapes/descents-roundtrip"));
    assert!(text.contains("3 checks, 0 failed"));
}

#[test]
fn exit_codes_follow_the_contract() {
    // Usage errors: bad verb, bad combination, missing required option.
    assert_eq!(msym(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        msym(&["expand", "--basis", "F", "--of", "g", "--label", "[1]"]).status.code(),
        Some(2)
    );
    assert_eq!(
        msym(&["enumerate", "--kind", "ssyt", "--max-entry", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        msym(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
    // Domain errors: well-formed options, bad data.
    assert_eq!(
        msym(&["expand", "--basis", "s", "--of", "g", "--label", "[2,1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        msym(&["coproduct", "--basis", "MMR", "--label", "[(1,2)]"]).status.code(),
        Some(1)
    );
    // Diagnostics are single lines on stderr.
    let out = msym(&["expand", "--basis", "s", "--of", "g", "--label", "[2,1"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.trim().lines().count(), 1);
}

#[test]
fn every_json_output_reparses() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["expand", "--basis", "s", "--of", "G", "--label", "[1]"],
        vec!["expand", "--basis", "L", "--of", "Ltilde", "--label", "(2,1)", "--cap", "4"],
        vec!["expand", "--basis", "Ltilde", "--of", "Mtilde", "--label", "(1,1)"],
        vec!["expand", "--basis", "F", "--of", "Rtilde", "--label", "(1,1)"],
        vec!["expand", "--basis", "Rtilde", "--of", "F", "--label", "(1,1)"],
        vec!["product", "--basis", "MMR", "--left", "[1]", "--right", "[1]"],
        vec!["product", "--basis", "g", "--left", "[1]", "--right", "[1]"],
        vec!["coproduct", "--basis", "mMR", "--label", "121"],
        vec!["enumerate", "--kind", "valued-set", "--shape", "[1,1]", "--max-entry", "2"],
        vec!["enumerate", "--kind", "mperms", "--alphabet", "2", "--max-len", "3"],
        vec!["oracle", "--series", "G", "--shape", "[1]", "--maxdeg", "3"],
        vec!["mjh", "--poset", r#"{"n":2,"covers":[[1,2]],"theta":[2,1]}"#, "--length", "3"],
    ];
    for args in runs {
        let v = stdout_json(&args);
        let text = serde_json::to_string(&v).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v, back, "{args:?}");
    }
}

#[test]
fn ltilde_expansion_golden() {
    let v = stdout_json(&["expand", "--basis", "L", "--of", "Ltilde", "--label", "(2,1)", "--cap", "5"]);
    assert_eq!(
        v["coeffs"],
        json!({
            "(2,1)": 1, "(1,2,1)": 1, "(2,1,1)": 2,
            "(1,1,2,1)": 1, "(1,2,1,1)": 2, "(2,1,1,1)": 3,
        })
    );
    assert_eq!(v["cap"], json!(5));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join("msym-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("expand.json");
    let out = msym(&[
        "expand", "--basis", "s", "--of", "g", "--label", "[2,1]",
        "--output", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["coeffs"], json!({"[2,1]": 1, "[2]": 1}));
    std::fs::remove_dir_all(&dir).ok();
}
