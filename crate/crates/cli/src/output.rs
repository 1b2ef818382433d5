use std::collections::BTreeMap;

use gci_core::indicators::{IndicatorDef, IndicatorError, IndicatorReport, IndicatorResult, ViolationReport};
use gci_core::ontology::{Severity, Violation};
use gci_core::query::{QuestionKind, TableReport};
use gci_core::store::{Graph, Iri, Term};
use serde::Serialize;

use crate::show;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidateReport {
    pub cd: Vec<ViolationReport>,
    pub ci: Vec<ViolationReport>,
}

impl ValidateReport {
    pub fn new(g: &Graph, violations: &[Violation]) -> Self {
        let of = |sev| violations.iter().filter(|v| v.severity == sev).map(|v| ViolationReport::new(g, v)).collect();
        ValidateReport { cd: of(Severity::CD), ci: of(Severity::CI) }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        for (label, list) in [("CD", &self.cd), ("CI", &self.ci)] {
            for v in list.iter() {
                out.push_str(&format!("{label}  {}  {}  {}  [{}]\n", v.instance, v.class, v.restriction, v.observed));
            }
        }
        out.push_str(&format!("{} CD, {} CI\n", self.cd.len(), self.ci.len()));
        out
    }

    pub fn csv(&self) -> Result<String, String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let fail = |e: csv::Error| e.to_string();
        w.write_record(["severity", "instance", "class", "restriction", "observed"]).map_err(fail)?;
        for v in self.cd.iter().chain(&self.ci) {
            w.write_record([&v.severity.to_string(), &v.instance, &v.class, &v.restriction, &v.observed]).map_err(fail)?;
        }
        finish(w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub indicator: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeriveReport {
    pub city: String,
    pub results: Vec<IndicatorReport>,
    pub failures: Vec<Failure>,
}

impl DeriveReport {
    pub fn new(
        g: &Graph,
        city: &Iri,
        results: &[(&IndicatorDef, Result<IndicatorResult, IndicatorError>)],
    ) -> Self {
        let mut report = DeriveReport { city: show(g, &Term::Iri(city.clone())), results: Vec::new(), failures: Vec::new() };
        for (def, r) in results {
            match r {
                Ok(r) => report.results.push(r.report(g)),
                Err(e) => report.failures.push(Failure { indicator: def.id.to_string(), error: e.to_string() }),
            }
        }
        report
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&format!(
                "{}  {} {}  = {} {} / {} {}\n",
                r.indicator, r.value, r.unit, r.numerator.value, r.numerator.unit, r.denominator.value, r.denominator.unit
            ));
            for t in &r.trace {
                let note = t.note.as_deref().map(|n| format!("  ({n})")).unwrap_or_default();
                out.push_str(&format!("    {}  {}{note}\n", t.member, t.contribution));
            }
            for w in &r.warnings {
                out.push_str(&format!("    {} {}: {} [{}]\n", w.severity, w.instance, w.restriction, w.observed));
            }
        }
        for f in &self.failures {
            out.push_str(&format!("{}  failed: {}\n", f.indicator, f.error));
        }
        out
    }

    pub fn csv(&self) -> Result<String, String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let fail = |e: csv::Error| e.to_string();
        w.write_record([
            "indicator", "city", "value", "unit", "numerator", "numerator_unit", "denominator", "denominator_unit",
            "warnings", "error",
        ])
        .map_err(fail)?;
        let mut rows: BTreeMap<&str, Vec<String>> = BTreeMap::new();
        for r in &self.results {
            rows.insert(
                &r.indicator,
                vec![
                    r.indicator.clone(),
                    r.city.clone(),
                    r.value.clone(),
                    r.unit.clone(),
                    r.numerator.value.clone(),
                    r.numerator.unit.clone(),
                    r.denominator.value.clone(),
                    r.denominator.unit.clone(),
                    r.warnings.len().to_string(),
                    String::new(),
                ],
            );
        }
        for f in &self.failures {
            let mut row = vec![String::new(); 10];
            row[0] = f.indicator.clone();
            row[1] = self.city.clone();
            row[9] = f.error.clone();
            rows.insert(&f.indicator, row);
        }
        for row in rows.values() {
            w.write_record(row).map_err(fail)?;
        }
        finish(w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteEntry {
    pub id: &'static str,
    pub kind: QuestionKind,
    pub question: &'static str,
    /// `pass`, `fail`, `error`, or `ran` when there is no expected answer.
    pub status: &'static str,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
    pub rows: Vec<Vec<String>>,
}

pub fn suite_table(entries: &[SuiteEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let answer: Vec<String> = e.rows.iter().map(|r| r.join(" / ")).collect();
        out.push_str(&format!("{:<5} {:<6} {:?} {}  {}\n", e.status, e.id, e.kind, e.question, answer.join("; ")));
        if !e.detail.is_empty() {
            out.push_str(&format!("      {}\n", e.detail));
        }
    }
    let expected = entries.iter().filter(|e| e.status != "ran").count();
    let passed = entries.iter().filter(|e| e.status == "pass").count();
    out.push_str(&format!("{passed}/{expected} match expected\n"));
    out
}

pub fn suite_csv(entries: &[SuiteEntry]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| e.to_string();
    w.write_record(["id", "kind", "status", "question", "answer", "detail"]).map_err(fail)?;
    for e in entries {
        let answer: Vec<String> = e.rows.iter().map(|r| r.join(" / ")).collect();
        w.write_record([e.id, &format!("{:?}", e.kind), e.status, e.question, &answer.join("; "), &e.detail])
            .map_err(fail)?;
    }
    finish(w)
}

pub fn table_csv(t: &TableReport) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.columns).map_err(|e| e.to_string())?;
    for row in &t.rows {
        w.write_record(row).map_err(|e| e.to_string())?;
    }
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String, String> {
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}
