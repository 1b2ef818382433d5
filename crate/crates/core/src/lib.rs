//! Knowledge-graph engine for city energy indicators: a triple store, the ontology
//! schema and its closed-world checks, units and measures, indicator derivation, and a
//! small pattern query language.

pub mod store;
pub mod measures;
pub mod ontology;
pub mod indicators;
pub mod query;

/// The Toronto example data set in the supported Turtle subset.
pub const TORONTO_TTL: &str = include_str!("../data/toronto.ttl");

/// Parses [`TORONTO_TTL`] with the default prefixes.
pub fn toronto() -> store::Graph {
    store::parse_turtle(TORONTO_TTL, &store::PrefixMap::default()).expect("bundled fixture parses")
}
