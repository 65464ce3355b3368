use assert_cmd::Command;
use serde_json::Value;

const SCHEMA: &str = include_str!("../schema/report.schema.json");
const Z6: &str = r#"{"kind":"zmod","n":6}"#;
const Z4: &str = r#"{"kind":"zmod","n":4}"#;

fn regring(args: &[&str]) -> (i32, String, String) {
    let out = Command::cargo_bin("regring").unwrap().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, out, err) = regring(&all);
    assert!(!out.is_empty(), "no output; stderr: {err}");
    let doc: Value = serde_json::from_str(&out).unwrap();
    let schema = jsonschema::JSONSchema::compile(&serde_json::from_str(SCHEMA).unwrap()).unwrap();
    assert!(schema.is_valid(&doc), "report does not match the schema: {out}");
    (code, doc)
}

fn first_set(doc: &Value) -> Vec<String> {
    doc["result"]["sets"][0]["elements"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect()
}

#[test]
fn ring_info_reports_size_and_semiprimeness() {
    let (code, doc) = json(&["ring", "info", Z6]);
    assert_eq!(code, 0);
    assert_eq!(doc["ring"]["size"], 6);
    assert_eq!(doc["ring"]["semiprime"], true);
    assert_eq!(doc["result"]["regular_count"], 6);

    let (_, doc) = json(&["ring", "info", Z4]);
    assert_eq!(doc["ring"]["semiprime"], false);
    assert_eq!(doc["result"]["semiprime_witness"], "2");

    let (_, doc) = json(&["ring", "info", "example10"]);
    assert_eq!(doc["ring"]["size"], 1024);
    assert_eq!(doc["ring"]["semiprime"], false);
}

#[test]
fn ring_info_reads_spec_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m2.json");
    std::fs::write(&path, r#"{"kind":"matrix","k":2,"q":3}"#).unwrap();
    let (code, doc) = json(&["ring", "info", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["ring"]["kind"], "matrix");
    assert_eq!(doc["ring"]["size"], 81);
    assert_eq!(doc["result"]["regular_count"], 81);
}

#[test]
fn malformed_specs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"kind":"zmod","n":1}"#).unwrap();
    assert_eq!(regring(&["ring", "info", path.to_str().unwrap()]).0, 2);
    assert_eq!(regring(&["ring", "info", r#"{"kind":"zmod"}"#]).0, 2);
    assert_eq!(regring(&["ring", "info", "/nonexistent/spec.json"]).0, 2);
    let nonassoc = r#"{"kind":"table","p":2,"basis":["1","u"],"unity":[1,0],"constants":[[1,1,1,1]]}"#;
    assert_eq!(regring(&["ring", "info", nonassoc]).0, 2);
}

#[test]
fn inv_lists_inner_inverses() {
    let (code, doc) = json(&["inv", Z6, "--elem", "3", "--kind", "inner"]);
    assert_eq!(code, 0);
    assert_eq!(first_set(&doc), ["1", "3", "5"]);
    let (_, doc) = json(&["inv", Z6, "--elem", "3", "--kind", "reflexive"]);
    assert_eq!(first_set(&doc), ["3"]);
}

#[test]
fn reflexive_inverses_of_zero_are_zero() {
    for spec in [Z6, Z4, r#"{"kind":"matrix","k":2,"q":2}"#, "example10"] {
        let (code, doc) = json(&["inv", spec, "--elem", "0", "--kind", "reflexive"]);
        assert_eq!(code, 0);
        assert_eq!(first_set(&doc).len(), 1, "{spec}");
        assert_eq!(doc["result"]["sets"][0]["elements"][0], doc["result"]["element"]);
    }
}

#[test]
fn inv_of_example_a_keeps_the_count_above_the_cap() {
    let (_, doc) = json(&["inv", "example10", "--elem", "a", "--kind", "inner"]);
    let set = &doc["result"]["sets"][0];
    assert_eq!(set["count"], 512);
    assert_eq!(set["elements"].as_array().unwrap().len(), 64);
    assert_eq!(set["elided"], 448);

    let (_, doc) = json(&["inv", "example10", "--elem", "a", "--kind", "inner", "--all"]);
    assert_eq!(doc["result"]["sets"][0]["elements"].as_array().unwrap().len(), 512);

    let (_, doc) = json(&["inv", "example10", "--elem", "a", "--kind", "reflexive"]);
    let refl = first_set(&doc);
    assert_eq!(refl.len(), 16);
    assert_eq!(refl[0], "x");
}

#[test]
fn inv_ideals_and_annihilators() {
    let (_, doc) = json(&["inv", Z6, "--elem", "2", "--kind", "ideals"]);
    let sets = doc["result"]["sets"].as_array().unwrap();
    assert_eq!(sets.len(), 2);
    assert_eq!(sets[0]["count"], 3);
    let (_, doc) = json(&["inv", Z6, "--elem", "2", "--kind", "right-ann"]);
    assert_eq!(first_set(&doc), ["0", "3"]);
    let (_, doc) = json(&["inv", Z6, "--elem", "2", "--kind", "left-ann"]);
    assert_eq!(first_set(&doc), ["0", "3"]);
    let (_, doc) = json(&["inv", Z6, "--elem", "3", "--kind", "iann"]);
    assert_eq!(doc["result"]["sets"][0]["count"], 3);
    let (_, doc) = json(&["inv", Z6, "--elem", "3", "--kind", "outer"]);
    assert_eq!(first_set(&doc), ["0", "3"]);
}

#[test]
fn inv_parse_error_exits_2() {
    let (code, _, err) = regring(&["inv", "example10", "--elem", "a +* b", "--kind", "inner"]);
    assert_eq!(code, 2);
    assert!(err.contains("parse error"), "{err}");
    assert_eq!(regring(&["inv", "example10", "--elem", "y", "--kind", "inner"]).0, 2);
}

#[test]
fn inv_over_budget_is_skipped_with_exit_0() {
    let (code, doc) = json(&["inv", r#"{"kind":"matrix","k":3,"q":3}"#, "--elem", "1", "--kind", "inner", "--budget", "1000"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["status"], "skipped");
    assert_eq!(doc["ring"]["semiprime"], true);
}

#[test]
fn check_exit_codes() {
    let (code, doc) = json(&["check", Z6, "--checks", "theorem_inner"]);
    assert_eq!(code, 0);
    assert_eq!(doc["checks"][0]["status"], "pass");
    assert_eq!(regring(&["check", Z6, "--checks", "theorem_inner", "--expect-violation"]).0, 1);

    let (code, doc) = json(&["check", "example10", "--checks", "theorem_inner", "--expect-violation"]);
    assert_eq!(code, 0);
    let witnesses = doc["checks"][0]["witnesses"].as_array().unwrap();
    let names: Vec<&str> = witnesses.iter().map(|w| w["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["a", "b"]);
    assert_eq!(witnesses[0]["value"], "a");
    assert_eq!(witnesses[1]["value"], "b");
    assert_eq!(regring(&["check", "example10", "--checks", "theorem_inner"]).0, 1);

    assert_eq!(regring(&["check", Z6, "--checks", "no_such_check"]).0, 2);
    assert_eq!(regring(&["check", Z6, "--format", "yaml"]).0, 2);
}

#[test]
fn check_over_budget_skips_everything() {
    let (code, doc) = json(&["check", r#"{"kind":"zmod","n":5000}"#, "--budget", "100"]);
    assert_eq!(code, 0);
    assert_eq!(doc["summary"]["skipped"], 11);
    assert_eq!(doc["ring"]["semiprime"], false);
}

#[test]
fn no_timing_output_is_byte_identical() {
    let args = ["check", "M", "--checks", "all", "--no-timing"];
    let spec = r#"{"kind":"matrix","k":2,"q":2}"#;
    let args: Vec<&str> = args.iter().map(|&a| if a == "M" { spec } else { a }).collect();
    let first = regring(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first, regring(&args));
    assert!(!first.1.contains(" ms "));
}

#[test]
fn matrix_commands() {
    let (code, doc) = json(&["matrix", "--k", "2", "--q", "2", "ginverse", "1,0;0,0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["ginverse"], "1,0;0,0");

    let (_, doc) = json(&["matrix", "--k", "2", "--q", "3", "seteq", "1,2;0,1", "1,2;0,1"]);
    assert_eq!(doc["result"]["equal"], true);
    let (_, doc) = json(&["matrix", "--k", "2", "--q", "2", "seteq", "1,0;0,0", "0,0;0,1"]);
    assert_eq!(doc["result"]["equal"], false);

    let (_, doc) = json(&["matrix", "--k", "2", "--q", "2", "membership", "1,0;0,0", "1,1;0,0"]);
    assert_eq!(doc["result"]["b_in_aR"], true);
    assert_eq!(doc["result"]["b_in_Ra"], false);

    assert_eq!(regring(&["matrix", "--k", "2", "--q", "2", "ginverse", "1,0;0"]).0, 2);
    assert_eq!(regring(&["matrix", "--k", "2", "--q", "4", "ginverse", "1,0;0,0"]).0, 2);
}

#[test]
fn text_output_is_stable() {
    let (code, out, _) = regring(&["check", Z6, "--checks", "theorem_inner,nielsen", "--no-timing"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "ring: Z/6 (zmod, 6 elements, semiprime)");
    assert!(lines[2].starts_with("nielsen"));
    assert!(lines[3].starts_with("theorem_inner"));
    assert_eq!(lines[4], "summary: 2 pass, 0 violation, 0 skipped");

    let (_, out, _) = regring(&["inv", Z6, "--elem", "3", "--kind", "inner"]);
    assert!(out.contains("I(3) [3]: {1, 3, 5}"), "{out}");
}
