use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

const SCHEMA: &str = include_str!("../schema/output.schema.json");

fn matdegen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matdegen"))
        .args(args)
        .env_remove("MATDEGEN_THREADS")
        .output()
        .expect("binary runs")
}

fn schema() -> JSONSchema {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    JSONSchema::compile(&schema).expect("schema compiles")
}

/// Runs with `--json`, checks the exit code and validates against the schema.
fn json_of(args: &[&str], code: i32) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = matdegen(&all);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    let compiled = schema();
    if let Err(errors) = compiled.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| format!("{e} at {}", e.instance_path)).collect();
        panic!("{args:?} output violates the schema: {msgs:?}");
    }
    v
}

#[test]
fn every_verb_validates() {
    let hyp = std::env::temp_dir().join("matdegen-cli-test-hyp.json");
    std::fs::write(
        &hyp,
        r#"{"d":5,"n":3,"edges":[{"set":[1,2],"type":1},{"set":[1,2,3,4],"type":2}]}"#,
    )
    .unwrap();
    let hyp = hyp.to_str().unwrap();
    let runs: Vec<Vec<&str>> = vec![
        vec!["compare", "catalog:u27", "catalog:fano"],
        vec!["min-above", "catalog:fano", "--group-by-symmetry", "--stats"],
        vec!["min-above", "--rank4", "catalog:sixpoint"],
        vec!["decompose", "catalog:qs"],
        vec!["isomorphic", "catalog:fano", "catalog:pg2_2"],
        vec!["isomorphic", "catalog:fano", "catalog:qs"],
        vec!["automorphisms", "catalog:fano"],
        vec!["automorphisms", "catalog:u13"],
        vec!["reduce", hyp],
        vec!["reduce", "catalog:k33dual"],
        vec!["catalog", "list"],
        vec!["catalog", "show", "vamos"],
        vec!["steiner-experiment", "--kind", "projective", "--q", "2"],
    ];
    for args in runs {
        json_of(&args, 0);
    }
}

#[test]
fn compare_and_show() {
    assert_eq!(json_of(&["compare", "catalog:u27", "catalog:fano"], 0)["leq"], true);
    assert_eq!(json_of(&["compare", "catalog:fano", "catalog:u27"], 0)["leq"], false);
    let out = matdegen(&["catalog", "show", "fano"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "7 3");
    assert_eq!(lines.len(), 8);
}

#[test]
fn min_above_counts_and_classes() {
    let v = json_of(&["min-above", "--rank4", "catalog:k33dual", "--group-by-symmetry"], 0);
    assert_eq!(v["count"], 34);
    let mut sizes: Vec<u64> = v["classes"].as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 6, 9, 9, 9]);
}

#[test]
fn automorphism_generators_are_cycles() {
    let v = json_of(&["automorphisms", "catalog:fano"], 0);
    assert_eq!(v["order"], "168");
    let text = String::from_utf8(matdegen(&["automorphisms", "catalog:u13"]).stdout).unwrap();
    assert!(text.starts_with("order 6\n"));
}

#[test]
fn output_is_independent_of_threads() {
    for args in [
        vec!["min-above", "catalog:fano", "--group-by-symmetry"],
        vec!["min-above", "--rank4", "catalog:steiner348"],
        vec!["decompose", "catalog:fano", "--hints", "paper"],
    ] {
        let one = matdegen(&[&["--threads", "1"], &args[..]].concat());
        let four = matdegen(&[&["--threads", "4"], &args[..]].concat());
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}

#[test]
fn budget_gives_partial_json() {
    let v = json_of(&["min-above", "catalog:pg2_3", "--limit-nodes", "50"], 3);
    assert_eq!(v["complete"], false);
    let v = json_of(&["decompose", "catalog:k33dual", "--budget", "10"], 3);
    assert_eq!(v["complete"], false);
}

#[test]
fn usage_errors() {
    assert_eq!(matdegen(&["min-above", "catalog:nope"]).status.code(), Some(2));
    assert_eq!(matdegen(&["min-above", "--rank4", "catalog:fano"]).status.code(), Some(2));
    assert_eq!(matdegen(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(matdegen(&["compare", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(matdegen(&["compare", "catalog:fano", "catalog:u26"]).status.code(), Some(2));
}

#[test]
fn hint_files() {
    let path = std::env::temp_dir().join("matdegen-cli-test-hints.json");
    std::fs::write(&path, r#"{"realizable":[{"matroid":"fano","realizable":false}]}"#).unwrap();
    let v = json_of(&["decompose", "catalog:fano", "--hints", path.to_str().unwrap()], 0);
    assert_eq!(v["count"], 22);
    assert_eq!(json_of(&["decompose", "catalog:fano"], 0)["count"], 23);
    std::fs::write(&path, r#"{"realizable":[{"matroid":"fano"}]}"#).unwrap();
    assert_eq!(matdegen(&["decompose", "catalog:fano", "--hints", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn shuffled_catalog_entry_is_isomorphic() {
    let dir = std::env::temp_dir();
    let path = dir.join("matdegen-cli-test-shuffled.txt");
    let out = matdegen(&["--seed", "7", "catalog", "show", "k33dual", "--shuffle"]);
    std::fs::write(&path, out.stdout).unwrap();
    let v = json_of(&["isomorphic", "catalog:k33dual", path.to_str().unwrap()], 0);
    assert_eq!(v["isomorphic"], true);
}
