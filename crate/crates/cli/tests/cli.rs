use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn corpus(file: &str) -> String {
    root().join("corpus").join(file).to_string_lossy().into_owned()
}

fn qshift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qshift")).args(args).current_dir(root()).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn validator() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(root().join("schemas/report.schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&schema).unwrap()
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = qshift(&full);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", stdout(&o)));
    (code(&o), v)
}

#[test]
fn andrews_skolemization_of_allsk() {
    let o = qshift(&["skolemize", "--mode", "andrews", &corpus("allsk.fml")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "~(forall x. forall y. (P(x,sk0(x)) | Q(y,x)))");
}

#[test]
fn sw_proof_checks_in_ljpp_only() {
    assert_eq!(code(&qshift(&["check", "--system", "ljpp", &corpus("sw_ljpp.prf")])), 0);
    let o = qshift(&["check", "--system", "lj", &corpus("sw_ljpp.prf")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("eigenvariable"), "{}", stdout(&o));
}

#[test]
fn shipped_corpus_verifies() {
    let o = qshift(&["corpus", "verify"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn corrupted_fixture_is_a_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let src = std::fs::read_to_string(corpus("sw_ljpp.prf")).unwrap();
    let bad = src.replacen("imp-r 0 ;", "and-r 0 ;", 1);
    assert_ne!(src, bad);
    std::fs::write(dir.path().join("sw_ljpp.prf"), bad).unwrap();
    let o = qshift(&["corpus", "verify", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("sw_ljpp.prf") && out.contains("expected"), "{out}");
}

#[test]
fn empty_corpus_dir_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&qshift(&["corpus", "verify", dir.path().to_str().unwrap()])), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&qshift(&["no-such-command"])), 2);
    assert_eq!(code(&qshift(&["parse", "no/such/file.fml"])), 2);
    assert_eq!(code(&qshift(&["check", "--system", "lk", &corpus("bad_substitutability.prf")])), 1);
    assert_eq!(code(&qshift(&["cd5", "valid", "--bound", "2", &corpus("sl_countermodel.fml")])), 1);
    assert_eq!(code(&qshift(&["--max-domain", "2", "cd5", "valid", "--bound", "3", &corpus("sl_countermodel.fml")])), 3);
    assert_eq!(code(&qshift(&["--max-worlds", "1", "model-check", "--world", "w0", &corpus("sle.krp"), &corpus("cd.fml")])), 3);
    assert_eq!(code(&qshift(&["witness-incompleteness"])), 0);
}

#[test]
fn json_reports_match_the_schema() {
    let schema = validator();
    let cases: Vec<Vec<String>> = vec![
        vec!["parse".into(), corpus("cd.fml")],
        vec!["skolemize".into(), "--mode".into(), "parallel".into(), "--degree".into(), "2".into(), corpus("cd.fml")],
        vec!["check".into(), "--system".into(), "ljpp".into(), corpus("cd_ljpp.prf")],
        vec!["check".into(), "--system".into(), "lj".into(), corpus("cd_ljpp.prf")],
        vec!["deskolemize".into(), "--target".into(), corpus("cd.seq"), corpus("cd_sk.prf")],
        vec!["correct".into(), corpus("cd_desk.prf")],
        vec!["prenex".into(), corpus("prenex_sw.fml")],
        vec!["model-check".into(), "--world".into(), "w0".into(), corpus("sle.krp"), corpus("cd.fml")],
        vec!["frame-classify".into(), "--verify".into(), corpus("sle.krp")],
        vec!["cd5".into(), "eval".into(), corpus("sl.cd5"), corpus("allsk.fml")],
        vec!["cd5".into(), "valid".into(), "--bound".into(), "2".into(), corpus("sl_countermodel.fml")],
        vec!["cd5".into(), "crosscheck".into(), corpus("cd5_suite.fml")],
        vec!["corpus".into(), "verify".into()],
        vec!["generate".into(), "model".into(), "--count".into(), "2".into()],
        vec!["parse".into(), "missing.fml".into()],
        vec!["--max-domain".into(), "1".into(), "cd5".into(), "valid".into(), "--bound".into(), "2".into(), corpus("sl_countermodel.fml")],
        vec!["bogus".into()],
    ];
    let mut seen = std::collections::BTreeSet::new();
    for args in &cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (c, v) = json_report(&args);
        if let Err(errors) = schema.validate(&v) {
            let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
            panic!("{args:?}: {msgs:?}\n{v}");
        }
        assert_eq!(v["exit_code"].as_i64(), Some(c as i64), "{args:?}");
        seen.insert(v["status"].as_str().unwrap().to_string());
    }
    for s in ["ok", "rejected", "usage-error", "resource-cap"] {
        assert!(seen.contains(s), "no case produced status {s}");
    }
}

#[test]
fn output_is_deterministic() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["--seed", "42", "generate", "formula", "--count", "5", "--depth", "4"],
        vec!["--seed", "42", "generate", "model", "--count", "2"],
        vec!["skolemize", "--mode", "structural", "corpus/allsk.fml"],
        vec!["--json", "deskolemize", "--target", "corpus/cd.seq", "corpus/cd_sk.prf"],
        vec!["correct", "corpus/sw_ljpp.prf"],
        vec!["--json", "corpus", "verify"],
    ];
    for args in runs {
        let a = qshift(&args);
        let b = qshift(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty(), "{args:?}");
    }
    let a = qshift(&["--seed", "1", "generate", "formula", "--count", "5"]);
    let b = qshift(&["--seed", "2", "generate", "formula", "--count", "5"]);
    assert_ne!(a.stdout, b.stdout);
}
