//! A small basic-graph-pattern query language, its executor, and the competency
//! question suite.

mod exec;
mod parse;
mod suite;

use thiserror::Error;

pub use exec::{cell_text, execute, ResultTable, TableReport};
pub use parse::{parse_query, ArithOp, CompareOp, Expr, Filter, PatternTerm, Projection, Query, TriplePattern};
pub use suite::{cell_matches, check_expected, competency_suite, Competency, QuestionKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undeclared prefix {prefix:?} at byte {pos}")]
    UnknownPrefix { prefix: String, pos: usize },
    #[error("?{0} is not bound by any pattern")]
    Unbound(String),
    #[error("{0} is not a number")]
    NonNumeric(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("arithmetic overflow")]
    Overflow,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontology::builtin_schema;
    use crate::store::{parse_turtle, Graph, PrefixMap};

    fn run(g: &Graph, text: &str) -> Result<ResultTable, QueryError> {
        execute(g, builtin_schema(), &parse_query(text, g.prefixes())?)
    }

    #[test]
    fn suite_answers_on_fixture() {
        let g = crate::toronto();
        for c in competency_suite() {
            let table = run(&g, c.text).unwrap_or_else(|e| panic!("{}: {e}", c.id));
            if let Some(expected) = &c.expected {
                check_expected(g.prefixes(), &table, expected).unwrap_or_else(|e| panic!("{}: {e}", c.id));
            }
        }
    }

    #[test]
    fn suite_shape() {
        let suite = competency_suite();
        assert!(suite.iter().filter(|c| c.expected.is_some()).count() >= 9);
        let q5 = suite.iter().find(|c| c.id == "7.1-5").unwrap();
        assert_eq!(q5.expected.as_ref().unwrap()[0], ["0.90"]);
        for c in &suite {
            parse_query(c.text, &PrefixMap::default()).unwrap_or_else(|e| panic!("{}: {e}", c.id));
        }
    }

    #[test]
    fn parse_shapes() {
        let suite = competency_suite();
        let q1 = parse_query(suite[0].text, &PrefixMap::default()).unwrap();
        assert_eq!((q1.patterns.len(), q1.projection[0].column()), (2, "cityname"));
        let q9 = parse_query(suite[8].text, &PrefixMap::default()).unwrap();
        assert!(q9.is_aggregate());
        assert_eq!(q9.patterns.len(), 3);
    }

    #[test]
    fn parse_errors() {
        let pm = PrefixMap::default();
        assert_eq!(parse_query("SELECT ?x WHERE { }", &pm), Err(QueryError::Unbound("x".into())));
        assert!(matches!(parse_query("SELECT ?x WHERE { ?x nope:p ?y }", &pm), Err(QueryError::UnknownPrefix { .. })));
        assert!(matches!(parse_query("SELECT ?x WHERE { ?x ?p ?y } extra", &pm), Err(QueryError::Syntax { .. })));
        assert!(matches!(parse_query("SELECT ?x WHERE { ?x ?p }", &pm), Err(QueryError::Syntax { .. })));
        assert!(matches!(parse_query("SELECT ?x { ?x ?p ?o }", &pm), Err(QueryError::Syntax { pos: 10, .. })));
    }

    #[test]
    fn arithmetic_and_filters() {
        let g = parse_turtle(
            "@prefix : <http://example.org/t/> .\n:a :v 10 ; :w 0 ; :s \"x\" ; rdfs:label \"Alpha\" .\n:b :v 3 ; :w 2 ; :s \"y\" ; rdfs:label \"beta\" .",
            &PrefixMap::default(),
        )
        .unwrap();
        let pre = "PREFIX : <http://example.org/t/>\n";
        let t = run(&g, &format!("{pre}SELECT ?x WHERE {{ ?x :v ?v . FILTER(?v > 5) }}")).unwrap();
        assert_eq!(t.rows.len(), 1);
        let t = run(&g, &format!("{pre}SELECT ?x WHERE {{ ?x rdfs:label ?l . FILTER regex(?l, \"lph\") }}")).unwrap();
        assert_eq!(t.rows.len(), 1);
        let t = run(&g, &format!("{pre}SELECT ?x WHERE {{ ?x rdfs:label ?l . FILTER regex(?l, \"ALPHA\") }}")).unwrap();
        assert!(t.rows.is_empty());
        assert_eq!(
            run(&g, &format!("{pre}SELECT ((?v/?w) AS ?r) WHERE {{ ?x :v ?v ; :w ?w . }}")),
            Err(QueryError::DivisionByZero)
        );
        assert!(matches!(
            run(&g, &format!("{pre}SELECT ((?s + 1) AS ?r) WHERE {{ ?x :s ?s . }}")),
            Err(QueryError::NonNumeric(_))
        ));
        let t = run(&g, &format!("{pre}SELECT (COUNT(*) AS ?n) WHERE {{ ?x :v ?v . }}")).unwrap();
        assert_eq!(cell_text(g.prefixes(), &t.rows[0][0]), "2");
    }

    #[test]
    fn typing_goes_through_subclasses() {
        let g = crate::toronto();
        let t = run(&g, "SELECT ?b WHERE { ?b a gcibo:Building . }").unwrap();
        assert_eq!(t.rows.len(), 1);
        let t = run(&g, "SELECT ?b WHERE { ?b a gcibo:ResidentialBuilding . }").unwrap();
        assert_eq!(t.rows.len(), 1);
    }

    #[test]
    fn render_table() {
        let g = crate::toronto();
        let t = run(&g, competency_suite()[6].text).unwrap();
        let text = t.render(g.prefixes());
        assert_eq!(text.lines().count(), 2);
        assert!(text.starts_with("ServiceProvider"));
        assert!(text.contains(":Toronto_Hydro"));
    }
}
