use serde::Serialize;

use crate::ontology::{Severity, Violation};
use crate::store::{Graph, Term};

use super::derive::IndicatorResult;
use super::eval::TraceEntry;

/// JSON shape of one derived indicator. Decimals are strings so no precision is lost.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndicatorReport {
    pub indicator: String,
    pub city: String,
    pub value: String,
    pub unit: String,
    pub numerator: MeasureReport,
    pub denominator: MeasureReport,
    pub trace: Vec<TraceReport>,
    pub warnings: Vec<ViolationReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeasureReport {
    pub value: String,
    pub unit: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceReport {
    pub member: String,
    pub contribution: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    pub severity: Severity,
    pub instance: String,
    pub class: String,
    pub restriction: String,
    pub observed: String,
}

impl ViolationReport {
    pub fn new(g: &Graph, v: &Violation) -> Self {
        ViolationReport {
            severity: v.severity,
            instance: g.display(&v.instance),
            class: g.prefixes().display(&v.class),
            restriction: v.restriction.clone(),
            observed: v.observed.clone(),
        }
    }
}

fn trace(g: &Graph, entries: &[TraceEntry]) -> Vec<TraceReport> {
    entries
        .iter()
        .map(|t| TraceReport { member: g.display(&t.member), contribution: t.contribution.to_string(), note: t.note.clone() })
        .collect()
}

impl IndicatorResult {
    pub fn report(&self, g: &Graph) -> IndicatorReport {
        let pm = g.prefixes();
        let measure = |m: &crate::measures::Measure| MeasureReport {
            value: m.value.to_string(),
            unit: pm.display(&m.unit.id),
        };
        IndicatorReport {
            indicator: self.indicator.to_string(),
            city: g.display(&Term::Iri(self.city.clone())),
            value: self.value.value.to_string(),
            unit: pm.display(&self.value.unit.id),
            numerator: measure(&self.numerator_value),
            denominator: measure(&self.denominator_value),
            trace: trace(g, &self.trace),
            warnings: self.warnings.iter().map(|v| ViolationReport::new(g, v)).collect(),
        }
    }
}
