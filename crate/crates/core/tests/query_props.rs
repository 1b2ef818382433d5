mod common;

use std::collections::BTreeSet;

use common::city;
use gci_core::ontology::{builtin_schema, instances_of, ClassExpression};
use gci_core::query::{execute, parse_query, ResultTable};
use gci_core::store::vocab::gcibo;
use gci_core::store::{Graph, PrefixMap, Term};
use proptest::prelude::*;

const PATTERNS: [&str; 4] = [
    "?b a gcibo:Building",
    "?b gcibo:hasElectricalConsumption ?q",
    "?q om:value ?m",
    "?m om:numerical_value ?v",
];

fn run(g: &Graph, text: &str) -> ResultTable {
    let q = parse_query(text, &PrefixMap::default()).unwrap_or_else(|e| panic!("{e}: {text}"));
    execute(g, builtin_schema(), &q).unwrap()
}

fn column(t: &ResultTable, i: usize) -> BTreeSet<Term> {
    t.rows.iter().map(|r| r[i].clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pattern_order_does_not_matter(c in city(), order in Just((0..PATTERNS.len()).collect::<Vec<_>>()).prop_shuffle()) {
        let g = c.graph();
        let head = "SELECT ?b ?q ?m ?v WHERE { ";
        let given = format!("{head}{} }}", PATTERNS.join(" . "));
        let shuffled = format!("{head}{} }}", order.iter().map(|&i| PATTERNS[i]).collect::<Vec<_>>().join(" . "));
        prop_assert_eq!(run(&g, &given), run(&g, &shuffled));
    }

    #[test]
    fn count_equals_row_count(c in city()) {
        let g = c.graph();
        let body = "WHERE { ?b a gcibo:Building . ?b gcibo:hasFloorArea ?a }";
        let rows = run(&g, &format!("SELECT ?b ?a {body}")).rows.len();
        let counted = run(&g, &format!("SELECT (COUNT(*) AS ?n) {body}"));
        prop_assert_eq!(counted.rows.len(), 1);
        prop_assert_eq!(counted.rows[0][0].as_literal().unwrap().lexical(), rows.to_string());
        let distinct = run(&g, &format!("SELECT (COUNT(DISTINCT ?b) AS ?n) {body}"));
        let buildings = column(&run(&g, &format!("SELECT ?b {body}")), 0).len();
        prop_assert_eq!(distinct.rows[0][0].as_literal().unwrap().lexical(), buildings.to_string());
    }

    #[test]
    fn subclass_answers_are_a_subset(c in city()) {
        let g = c.graph();
        let all = column(&run(&g, "SELECT ?b WHERE { ?b a gcibo:Building }"), 0);
        for kind in common::BUILDING_KINDS {
            let some = column(&run(&g, &format!("SELECT ?b WHERE {{ ?b a gcibo:{kind} }}")), 0);
            prop_assert!(some.is_subset(&all));
        }
        let want = instances_of(&g, builtin_schema(), &ClassExpression::Named(gcibo::iri("Building")));
        prop_assert_eq!(all, want);
    }

    #[test]
    fn numeric_filters_partition_rows(c in city(), cut in 0i64..5000) {
        let g = c.graph();
        let body = "?b om:numerical_value ?v";
        let all = run(&g, &format!("SELECT ?b ?v WHERE {{ {body} }}")).rows.len();
        let low = run(&g, &format!("SELECT ?b ?v WHERE {{ {body} FILTER(?v < {cut}) }}")).rows.len();
        let high = run(&g, &format!("SELECT ?b ?v WHERE {{ {body} FILTER(?v >= {cut}) }}")).rows.len();
        prop_assert_eq!(low + high, all);
    }
}

#[test]
fn empty_graph_gives_empty_tables() {
    let g = Graph::empty(PrefixMap::default());
    let queries = [
        "SELECT ?x WHERE { ?x ?p ?o }",
        "SELECT * WHERE { ?b a gcibo:Building . ?b gcibo:hasFloorArea ?a }",
        "SELECT DISTINCT ?t WHERE { ?x a ?t }",
    ];
    for text in queries {
        let t = run(&g, text);
        assert!(t.rows.is_empty(), "{text}");
        assert!(!t.columns.is_empty());
    }
}
