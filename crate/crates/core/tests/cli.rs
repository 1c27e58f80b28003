use std::path::PathBuf;
use std::process::{Command, Output};

use multispace::format::{parse, render};
use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn mspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mspace")).args(args).output().expect("spawn mspace")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = mspace(&all);
    let v = serde_json::from_slice(&out.stdout).expect("json output");
    (out.status.code().unwrap(), v)
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn latin_square_is_not_a_multigroup() {
    let out = mspace(&["check", &fixture("latin3.mspace.json"), "--level", "multigroup"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("check multigroup: fails"), "{text}");
}

#[test]
fn z6_is_a_multiring() {
    let out = mspace(&["check", &fixture("z6_ring.mspace.json"), "--level", "multiring"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_input_exits_with_two() {
    let path = scratch("broken.mspace.json");
    std::fs::write(&path, "{ \"format_version\": \"1\", \"kind\": ").unwrap();
    let out = mspace(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn missing_file_exits_with_two() {
    let out = mspace(&["check", "/nonexistent/x.mspace.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wrong_structure_kind_exits_with_one() {
    let out = mspace(&["analyze", "dim", &fixture("z6_ring.mspace.json")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn constructed_latin_multispace_checks_clean() {
    let path = scratch("latin_3_2.mspace.json");
    let out = mspace(&["construct", "latin", "--n", "3", "--k", "2", "--seed", "1", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let (code, v) = json(&["check", path.to_str().unwrap(), "--level", "multispace"]);
    assert_eq!(code, 0);
    assert_eq!(v["holds"], Value::Bool(true));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["components"].as_array().unwrap().len(), 2);
}

#[test]
fn construction_is_reproducible_from_the_seed() {
    let a = mspace(&["construct", "latin", "--n", "4", "--k", "3", "--seed", "7"]);
    let b = mspace(&["construct", "latin", "--n", "4", "--k", "3", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cyclic_union_has_one_component_per_order() {
    let out = mspace(&["construct", "cyclic_union", "--orders", "3,3", "--shared-identity"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["components"].as_array().unwrap().len(), 2);
    assert_eq!(doc["universe"].as_array().unwrap().len(), 5);
}

#[test]
fn fan_adds_one_component_per_new_element() {
    let out = mspace(&["construct", "fan", "--base", "Z2", "--n", "3", "--policy", "absorb"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["components"].as_array().unwrap().len(), 3);
}

#[test]
fn series_of_z8_has_length_three() {
    let (code, v) = json(&["analyze", "series", &fixture("z8.mspace.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["chain_count"], 1);
    assert_eq!(v["data"]["lengths"], serde_json::json!([3]));
}

#[test]
fn decompose_z6() {
    let (code, v) = json(&["analyze", "decompose", &fixture("z6_ring.mspace.json")]);
    assert_eq!(code, 0);
    assert_eq!(
        v["data"]["components"][0]["pieces"],
        serde_json::json!([["0", "3"], ["0", "2", "4"]])
    );
}

#[test]
fn fixed_points_of_two_constant_maps() {
    let (code, v) = json(&[
        "analyze",
        "fixed-point",
        &fixture("two_components.metric.json"),
        "--mapping",
        &fixture("two_constants.mapping.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["count"], 2);
    assert_eq!(v["data"]["fixed_points"], serde_json::json!(["a", "e"]));
}

#[test]
fn wandering_sequence_settles_in_the_second_component() {
    let (code, v) = json(&[
        "analyze",
        "sequence",
        &fixture("two_components.metric.json"),
        "--sequence",
        &fixture("wandering.sequence.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["limit"], "d");
}

#[test]
fn dim_flags_three_lines() {
    let (code, v) = json(&["analyze", "dim", &fixture("three_lines.mspace.json")]);
    assert_eq!(code, 1, "{v}");
}

#[test]
fn text_output_starts_with_verdict_line() {
    let out = mspace(&["analyze", "ideal-chain", &fixture("z6_ring.mspace.json")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("analyze ideal-chain: holds"));
}

#[test]
fn every_fixture_round_trips_byte_for_byte() {
    let dir = PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"));
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = parse(&text).unwrap();
        assert_eq!(render(&doc), text, "{}", path.display());
        seen += 1;
    }
    assert!(seen >= 10);
}
