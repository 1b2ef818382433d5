//! Triples, prefixes, an indexed in-memory graph, and Turtle I/O.

mod graph;
mod prefixes;
mod term;
mod turtle;
pub mod vocab;

pub use graph::{Graph, GraphBuilder};
pub use prefixes::PrefixMap;
pub use term::{Iri, Literal, LiteralKind, Term, TermError, Triple};
pub use turtle::{parse_into, parse_prefixes, parse_turtle, serialize_turtle, ParseError, ParseErrorKind};
