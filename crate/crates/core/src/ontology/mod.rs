//! The GCI schema: classes, subclass axioms and property restrictions, with
//! subclass closure, closed-world restriction checks and building classification.

mod builtin;
mod check;
mod dump;
mod expr;
mod schema;

use thiserror::Error;

pub use builtin::builtin_schema;
pub use check::{
    check_instance, classify_building, entailed_types, instances_of, is_instance, satisfies, validate_graph, Severity,
    Violation,
};
pub use dump::schema_graph;
pub use expr::{ClassExpression, Datatype, Filler, Restriction, RestrictionKind};
pub use schema::{BuildingRule, Schema, SchemaBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OntologyError {
    #[error("unknown class <{0}>")]
    UnknownClass(String),
    #[error("subclass cycle through <{0}>")]
    Cycle(String),
    #[error("{0} is not typed as a gcibo:Building")]
    NotABuilding(String),
    #[error("cannot classify {building}: {reason}")]
    FloorArea { building: String, reason: String },
}
