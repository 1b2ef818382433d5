#![allow(dead_code)]

use std::path::{Path, PathBuf};

use gci_cli::{cmd_validate, Format, RunConfig};
use serde_json::Value;

pub fn fixture_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/toronto.ttl")
}

pub fn fixture_text() -> String {
    std::fs::read_to_string(fixture_path()).unwrap()
}

pub fn config(paths: Vec<PathBuf>, format: Format) -> RunConfig {
    RunConfig { input_paths: paths, city: None, format, skip_missing: false, strict_exit: false, prefix_file: None }
}

/// One planted defect: the fixture with a single edit, and the finding it must produce.
pub struct Counter {
    pub name: &'static str,
    pub text: String,
    pub instance: &'static str,
    pub class: &'static str,
}

fn edit(name: &'static str, from: &str, to: &str, instance: &'static str, class: &'static str) -> Counter {
    let base = fixture_text();
    assert_eq!(base.matches(from).count(), 1, "{name}: edit anchor must be unique");
    Counter { name, text: base.replacen(from, to, 1), instance, class }
}

fn append(name: &'static str, extra: &str, instance: &'static str, class: &'static str) -> Counter {
    Counter { name, text: format!("{}\n{extra}\n", fixture_text()), instance, class }
}

pub fn counter_fixtures() -> Vec<Counter> {
    vec![
        edit(
            "missing exactly-1 literal",
            "    gcise:accountActive true ;\n",
            "",
            ":ServiceAccount_01",
            "gcise:ServiceAccount",
        ),
        append(
            "violated only range",
            ":ServiceAccount_01 gcise:hasServiceInterruption :JohnDoe .",
            ":ServiceAccount_01",
            "gcise:ServiceAccount",
        ),
        append(
            "public building with private owner",
            ":Toronto_Building_01 a gcibo:PublicBuilding .",
            ":Toronto_Building_01",
            "gcibo:PublicBuilding",
        ),
        edit(
            "exactly half residential floor area",
            "om:numerical_value 900 ;",
            "om:numerical_value 500 ;",
            ":Toronto_Building_01",
            "gcibo:ResidentialBuilding",
        ),
        edit(
            "account without provider",
            "    gcii:providedBy :Toronto_Hydro ;\n",
            "",
            ":ServiceAccount_01",
            "gcise:ServiceAccount",
        ),
        edit(
            "missing some-values-from",
            "    gcibo:hasUnitAddress :TenantSpace_01 ;\n",
            "",
            ":Toronto_Building_01",
            "gcibo:Building",
        ),
        edit(
            "wrong unit for has-value",
            "om:numerical_value 2.4 ;\n    om:unit_of_measure gci:population_cardinality_unit .",
            "om:numerical_value 2.4 ;\n    om:unit_of_measure om:one .",
            ":Toronto_avg_household_size_value",
            "gcis:Household_size_measure",
        ),
        edit(
            "provider authorizes no account",
            "    gcise:authorizes :ServiceAccount_01 .",
            "    rdfs:comment \"no accounts\" .",
            ":Toronto_Hydro",
            "gcise:ServiceProvider",
        ),
        edit(
            "exactly-1 exceeded",
            "    ic:hasAddress :Address_01 ;\n",
            "    ic:hasAddress :Address_01, :Address_02 ;\n",
            ":Toronto_Building_01",
            "gcibo:Building",
        ),
        edit(
            "literal of the wrong datatype",
            "gcii:certificationDate \"2016-01-01T00:00:00\"^^xsd:dateTime",
            "gcii:certificationDate \"January 2016\"",
            ":ServiceAccount_01",
            "gcii:APurchase",
        ),
    ]
}

/// Runs `validate --format json` on `text` and returns the exit code and report.
pub fn validate(text: &str) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("input.ttl");
    std::fs::write(&path, text).unwrap();
    let out = cmd_validate(&config(vec![path], Format::Json));
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (out.code, serde_json::from_str(&out.stdout).unwrap())
}

pub fn findings(report: &Value, severity: &str) -> Vec<(String, String)> {
    report[severity]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| (v["instance"].as_str().unwrap().to_string(), v["class"].as_str().unwrap().to_string()))
        .collect()
}
