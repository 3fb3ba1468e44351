use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn stringc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringc"))
        .args(args)
        .env_remove("STRINGC_CAP")
        .env_remove("STRINGC_JSON")
        .env_remove("STRINGC_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn validate(schema_file: &str, v: &Value) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema").join(schema_file);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

#[test]
fn verify_dihedral_catalog_entry() {
    let o = stringc(&["verify", "catalog:T5.9"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("D_5"), "{out}");
    assert!(out.contains("string C-group: true"), "{out}");
}

#[test]
fn verify_reports_witness_orders() {
    let o = stringc(&["verify", "catalog:IPF.3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("|G_0∩G_3|=120 vs |G_{0,3}|=10"), "{}", stdout(&o));
}

#[test]
fn verify_graph_file() {
    let o = stringc(&["verify", &data("simplex4.graph")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("type: (3,3,3)") && out.contains("S_5") && out.contains("string C-group: true"), "{out}");
}

#[test]
fn verify_json_matches_schema() {
    for input in ["catalog:IPF.1", "catalog:T2.1", data("hemicube.sggi").as_str()] {
        let o = stringc(&["--json", "verify", input]);
        assert_eq!(o.status.code(), Some(0));
        validate("verify.schema.json", &json(&o));
    }
}

#[test]
fn invalid_input_exits_one() {
    let o = stringc(&["verify", &data("not_involutions.sggi")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(stringc(&["verify", "/nonexistent/file"]).status.code(), Some(1));
    assert_eq!(stringc(&["verify", "catalog:T9.9"]).status.code(), Some(1));
    assert_eq!(stringc(&["extend", &data("hemicube.sggi"), "--split", "2"]).status.code(), Some(1));
}

#[test]
fn exhausted_cap_exits_two() {
    let o = stringc(&["--cap", "0", "verify", "catalog:T2.9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("indeterminate"));
    let o = stringc(&["--cap", "0", "--json", "verify", "catalog:T2.9"]);
    assert_eq!(o.status.code(), Some(2));
    validate("verify.schema.json", &json(&o));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_stringc"))
        .args(["--json", "sigma", "5", "1"])
        .env("STRINGC_CAP", "777")
        .output()
        .unwrap();
    assert_eq!(json(&o)["config"]["intersection_cap"], 777);
}

#[test]
fn sigma_counts() {
    assert_eq!(stdout(&stringc(&["sigma", "7", "4"])).trim(), "35");
    assert_eq!(stdout(&stringc(&["sigma", "5", "1"])).trim(), "1");
    let o = stringc(&["--json", "sigma", "6", "2"]);
    let v = json(&o);
    assert_eq!((v["count"].as_u64(), v["rank"].as_u64()), (Some(4), Some(4)));
}

#[test]
fn classify_json_is_valid_and_reproducible() {
    let a = stringc(&["--json", "classify", "5", "4"]);
    assert_eq!(a.status.code(), Some(0));
    let v = json(&a);
    assert_eq!(v["count"], 1);
    assert_eq!(v["config"]["max_degree"], 9);
    validate("classify.schema.json", &v);
    let b = stringc(&["--json", "classify", "5", "4"]);
    assert_eq!(a.stdout, b.stdout);

    let c = stringc(&["--json", "--workers", "2", "--seed-check", "classify", "6", "4"]);
    let v = json(&c);
    assert_eq!((v["count"].as_u64(), v["seed_check"].as_str()), (Some(4), Some("identical")));
    assert_eq!(v["config"]["workers"], 2);
    validate("classify.schema.json", &v);
}

#[test]
fn classify_rejects_large_degree() {
    assert_eq!(stringc(&["--max-degree", "6", "classify", "7", "5"]).status.code(), Some(1));
}

#[test]
fn extended_hemicube_is_not_a_cgroup() {
    let dir = std::env::temp_dir().join(format!("stringc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let o = stringc(&["extend", &data("hemicube.sggi"), "--split", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let file = dir.join("ext.sggi");
    std::fs::write(&file, &o.stdout).unwrap();
    let v = stringc(&["verify", file.to_str().unwrap()]);
    assert!(stdout(&v).contains("string C-group: false"), "{}", stdout(&v));

    let d = stringc(&["extend", "catalog:T5.9", "--dual"]);
    assert_eq!(stdout(&d), "degree 5\n(2,3)(4,5)\n(1,2)(3,4)\n");
    let s = stringc(&["extend", "catalog:T2.1", "--sesqui", "0", "--tau", "(20,21)"]);
    assert_eq!(s.status.code(), Some(0), "{}", String::from_utf8_lossy(&s.stderr));
    assert!(stdout(&s).starts_with("degree 21\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn export_dot_round_trips() {
    let o = stringc(&["export-dot", &data("simplex4.graph")]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("graph {"));
    assert!(dot.contains("1 -- 2 [label=0];") && dot.contains("4 -- 5 [label=3];"), "{dot}");
}

#[test]
fn catalog_verify_exit_codes() {
    let o = stringc(&["catalog-verify", "T5.*"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = stringc(&["catalog-verify", "IPF.9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]"));
    let o = stringc(&["--json", "catalog-verify", "T3.*"]);
    let v = json(&o);
    assert_eq!(v["failed"], 0);
    assert!(v["entries"].as_array().unwrap().len() >= 7);
}
