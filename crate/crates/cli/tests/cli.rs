mod support;

use std::process::Command;

use gci_cli::{EXIT_FINDINGS, EXIT_INPUT, EXIT_OK, EXIT_USAGE};
use support::fixture_path;

fn fixture() -> String {
    fixture_path().display().to_string()
}

/// Runs the library entry point in-process.
fn gci(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = gci_cli::run(std::iter::once("gci").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn exit_codes() {
    let f = fixture();
    assert_eq!(gci(&["validate", &f]).0, EXIT_OK);
    assert_eq!(gci(&["validate", "--strict", &f]).0, EXIT_FINDINGS);
    assert_eq!(gci(&["derive", &f, "-i", "7.1"]).0, EXIT_OK);
    assert_eq!(gci(&["derive", &f, "-i", "7.3"]).0, EXIT_FINDINGS);
    assert_eq!(gci(&["derive", &f, "-i", "7.9"]).0, EXIT_USAGE);
    assert_eq!(gci(&["suite", &f]).0, EXIT_OK);
    assert_eq!(gci(&["query", &f, "-e", "SELECT ?x WHERE {"]).0, EXIT_USAGE);
    assert_eq!(gci(&["validate", "/no/such/file.ttl"]).0, EXIT_INPUT);
    assert_eq!(gci(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(gci(&["derive", &f, "--city", "ex:nowhere"]).0, EXIT_USAGE);
    let (code, out, _) = gci(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("validate"));
}

#[test]
fn malformed_turtle_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ttl");
    std::fs::write(&bad, "ex:a ex:b").unwrap();
    let (code, _, err) = gci(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("bad.ttl"), "{err}");
}

#[test]
fn derive_json_is_byte_for_byte_stable() {
    let f = fixture();
    let (_, first, _) = gci(&["derive", &f, "--format", "json"]);
    for _ in 0..5 {
        assert_eq!(gci(&["derive", &f, "--format", "json"]).1, first);
    }
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    let r71 = v["results"].as_array().unwrap().iter().find(|r| r["indicator"] == "7.1").unwrap();
    assert_eq!(r71["value"], "1939.96175908222");
    assert_eq!(r71["numerator"]["value"], "5073000000");
    assert_eq!(r71["denominator"]["value"], "2615000");
    assert_eq!(r71["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn query_formats() {
    let f = fixture();
    let q = "SELECT ?b ?o WHERE { ?b gcibo:owned_by ?o . ?b a gcibo:Building }";
    let (code, table, _) = gci(&["query", &f, "-e", q]);
    assert_eq!(code, EXIT_OK);
    assert!(table.contains("JohnDoe"), "{table}");

    let (_, csv, _) = gci(&["query", &f, "-e", q, "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("b,o"));
    assert_eq!(lines.count(), 1);

    let (_, json, _) = gci(&["query", &f, "-e", q, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["columns"], serde_json::json!(["b", "o"]));
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn query_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.rq");
    std::fs::write(&path, "SELECT (COUNT(*) AS ?n) WHERE { ?x a gcibo:Building }").unwrap();
    let (code, out, _) = gci(&["query", &fixture(), "-q", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "n\n1\n");
}

#[test]
fn validate_csv_lists_findings() {
    let (code, out, _) = gci(&["validate", &fixture(), "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 2, "{out}");
    assert!(rows[1].starts_with("CI,"), "{out}");
}

#[test]
fn schema_dump_is_turtle() {
    let (code, out, _) = gci(&["schema", "dump"]);
    assert_eq!(code, EXIT_OK);
    let g = gci_core::store::parse_turtle(&out, &Default::default()).unwrap();
    assert!(g.len() > 100);
}

#[test]
fn prefix_file_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let prefixes = dir.path().join("prefixes.ttl");
    std::fs::write(&prefixes, "@prefix to: <http://example.org/toronto/> .\n").unwrap();
    let query = "SELECT ?o WHERE { to:Toronto_Building_01 gcibo:owned_by ?o }";
    let run = |env: Option<&std::path::Path>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_gci"));
        cmd.args(["query", &fixture(), "-e", query, "--format", "csv"]).env_remove("GCI_PREFIXES");
        if let Some(p) = env {
            cmd.env("GCI_PREFIXES", p);
        }
        cmd.output().unwrap()
    };
    let with = run(Some(&prefixes));
    assert_eq!(with.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(with.stdout).unwrap(), "o\n:JohnDoe\n");
    assert_eq!(run(None).status.code(), Some(EXIT_USAGE));
    assert_eq!(run(Some(&dir.path().join("missing.ttl"))).status.code(), Some(EXIT_INPUT));
}
