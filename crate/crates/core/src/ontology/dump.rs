use crate::store::vocab::{gs, owl, rdf, rdfs, xsd};
use crate::store::{Graph, GraphBuilder, Iri, Literal, PrefixMap, Term, Triple};

use super::expr::{ClassExpression, Datatype, Filler, Restriction, RestrictionKind};
use super::schema::Schema;

/// The schema as a graph: `rdfs:subClassOf` axioms, restrictions as `owl:Restriction`
/// blank nodes, unions as `owl:unionOf` object lists (the Turtle subset has no
/// collections), variables as `gs:Variable`, and rules as `rdfs:comment`.
pub fn schema_graph(s: &Schema) -> Graph {
    let mut out = Dump { b: GraphBuilder::new(PrefixMap::default()), next: 0 };
    for c in s.classes() {
        out.add(c.clone(), rdf::type_(), owl::iri("Class"));
    }
    for (child, parent) in s.subclass_axioms() {
        out.add(child.clone(), rdfs::iri("subClassOf"), parent.clone());
    }
    for (class, restrictions) in s.all_restrictions() {
        for r in restrictions {
            let node = out.restriction(r);
            out.add(class.clone(), rdfs::iri("subClassOf"), node);
        }
    }
    for (class, rule) in s.rules() {
        out.add(class.clone(), rdfs::iri("comment"), Literal::string(format!("rule: {}", rule.description())));
    }
    for (var, name, _) in s.variables() {
        out.add(var.clone(), rdf::type_(), gs::iri("Variable"));
        out.add(var.clone(), gs::iri("has_Name"), Literal::string(name));
    }
    out.b.freeze()
}

struct Dump {
    b: GraphBuilder,
    next: usize,
}

impl Dump {
    fn add(&mut self, s: impl Into<Term>, p: Iri, o: impl Into<Term>) {
        self.b.insert(Triple { subject: s.into(), predicate: Term::Iri(p), object: o.into() });
    }

    fn blank(&mut self, prefix: &str) -> Term {
        self.next += 1;
        Term::BlankNode(format!("{prefix}{}", self.next))
    }

    fn restriction(&mut self, r: &Restriction) -> Term {
        let node = self.blank("r");
        self.add(node.clone(), rdf::type_(), owl::iri("Restriction"));
        self.add(node.clone(), owl::iri("onProperty"), r.property.clone());
        let filler = match &r.filler {
            Filler::Class(e) => self.class_expression(e),
            Filler::Datatype(d) => Term::Iri(datatype_iri(*d)),
            Filler::Term(t) => t.clone(),
        };
        let on = match r.filler {
            Filler::Datatype(_) => "onDataRange",
            _ => "onClass",
        };
        match r.kind {
            RestrictionKind::Min | RestrictionKind::Exactly => {
                let p = if r.kind == RestrictionKind::Min { "minQualifiedCardinality" } else { "qualifiedCardinality" };
                self.add(node.clone(), owl::iri(p), Literal::integer(r.cardinality.unwrap_or(0) as i64));
                self.add(node.clone(), owl::iri(on), filler);
            }
            RestrictionKind::Only => self.add(node.clone(), owl::iri("allValuesFrom"), filler),
            RestrictionKind::Some => self.add(node.clone(), owl::iri("someValuesFrom"), filler),
            RestrictionKind::Value => self.add(node.clone(), owl::iri("hasValue"), filler),
        }
        node
    }

    fn class_expression(&mut self, e: &ClassExpression) -> Term {
        match e {
            ClassExpression::Named(c) => Term::Iri(c.clone()),
            ClassExpression::Restriction(r) => self.restriction(r),
            ClassExpression::UnionOf(members) => {
                let node = self.blank("u");
                self.add(node.clone(), rdf::type_(), owl::iri("Class"));
                for m in members {
                    let m = self.class_expression(m);
                    self.add(node.clone(), owl::iri("unionOf"), m);
                }
                node
            }
        }
    }
}

fn datatype_iri(d: Datatype) -> Iri {
    match d {
        Datatype::String => xsd::string(),
        Datatype::Integer => xsd::integer(),
        Datatype::Decimal | Datatype::Numeric => xsd::decimal(),
        Datatype::Boolean => xsd::boolean(),
        Datatype::DateTime => xsd::date_time(),
        Datatype::Any => rdfs::iri("Literal"),
    }
}
