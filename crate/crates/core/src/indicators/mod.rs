//! Ratio indicators built from sums, counts and products over class-defined
//! populations, evaluated against a graph with a per-member trace.

mod defs;
mod derive;
mod eval;
mod report;

use thiserror::Error;

use crate::measures::MeasureError;

pub use defs::{
    builtin_definitions, city_class, non_weather_interruptions, renewable_sources, variable_binding, AggregateExpr,
    IndicatorDef, PopulationSpec, Scale, VariableBinding,
};
pub use derive::{
    check_internal_consistency, derive_all, derive_indicator, evaluate, read_interruption, IndicatorResult,
    ServiceInterruptionRecord, ASSERTED_TOLERANCE,
};
pub use eval::{
    city_population_size, eval_aggregate, eval_population, in_city, resolve, Evaluation, Evaluator, MissingPolicy,
    PopulationSize, TraceEntry,
};
pub use report::{IndicatorReport, MeasureReport, TraceReport, ViolationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndicatorError {
    #[error("unknown indicator {0:?}")]
    UnknownIndicator(String),
    #[error("unknown variable <{0}>")]
    UnknownVariable(String),
    #[error("{0} is not a city")]
    NotACity(String),
    #[error("city population needs a city")]
    NoCity,
    #[error("{city}: no asserted population size and no residents")]
    NoPopulation { city: String },
    #[error("{variable} unreadable for {} member(s): {}", members.len(), members.join("; "))]
    MemberData { variable: String, members: Vec<String> },
    #[error("no {kind} for the city")]
    MissingQuantity { kind: String },
    #[error("{count} instances of {kind} for the city, expected 1")]
    AmbiguousQuantity { kind: String, count: usize },
    #[error("{node}: population size in {unit}, not a count")]
    NotACount { node: String, unit: String },
    #[error("{indicator}: denominator is {denominator}")]
    ZeroDenominator { indicator: String, denominator: String },
    #[error("{node}: {reason}")]
    Interruption { node: String, reason: String },
    #[error("{context}: {source}")]
    Measure { context: String, source: MeasureError },
    #[error("arithmetic overflow")]
    Overflow,
}
