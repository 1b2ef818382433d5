//! Arbitrary graphs over a few namespaces, with awkward IRIs and literals.

use gci_core::store::{Graph, Iri, Literal, LiteralKind, PrefixMap, Term, Triple};
use proptest::prelude::*;

const NAMESPACES: [&str; 4] = [
    "http://example.org/r/",
    "http://ontology.eil.utoronto.ca/GCI/Foundation/GCI-Foundation.owl#",
    "http://www.wurvoc.org/vocabularies/om-1.8",
    "urn:x-test:",
];

pub fn iri() -> impl Strategy<Value = Iri> {
    (0..NAMESPACES.len(), "[A-Za-z0-9_.%/#-]{0,10}").prop_map(|(i, local)| Iri::new(format!("{}{local}", NAMESPACES[i])).unwrap())
}

pub fn blank() -> impl Strategy<Value = Term> {
    "[a-z][a-z0-9]{0,5}".prop_map(Term::BlankNode)
}

pub fn literal() -> impl Strategy<Value = Literal> {
    prop_oneof![
        any::<String>().prop_map(Literal::string),
        "[\"\\\\\n\r\t a-z\u{1}\u{7f}é]{0,12}".prop_map(Literal::string),
        any::<i64>().prop_map(Literal::integer),
        "[+-]?[0-9]{1,6}".prop_map(|s| Literal::new(s, LiteralKind::Integer).unwrap()),
        "[+-]?[0-9]{0,6}\\.[0-9]{1,6}".prop_map(|s| Literal::new(s, LiteralKind::Decimal).unwrap()),
        any::<bool>().prop_map(Literal::boolean),
        (1900u32..2100, 1u32..13, 1u32..29, 0u32..24, 0u32..60)
            .prop_map(|(y, mo, d, h, mi)| Literal::new(format!("{y}-{mo:02}-{d:02}T{h:02}:{mi:02}:00"), LiteralKind::DateTime).unwrap()),
    ]
}

pub fn triple() -> impl Strategy<Value = Triple> {
    let subject = prop_oneof![3 => iri().prop_map(Term::Iri), 1 => blank()];
    let object = prop_oneof![2 => iri().prop_map(Term::Iri), 1 => blank(), 3 => literal().prop_map(Term::Literal)];
    (subject, iri(), object).prop_map(|(s, p, o)| Triple::new(s, p, o).unwrap())
}

pub fn graph() -> impl Strategy<Value = Graph> {
    prop::collection::vec(triple(), 0..60).prop_map(|ts| Graph::from_triples(ts, PrefixMap::default()))
}
