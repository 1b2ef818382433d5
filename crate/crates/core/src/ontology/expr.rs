use std::fmt;

use crate::store::{Iri, Literal, LiteralKind, PrefixMap, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RestrictionKind {
    Min,
    Exactly,
    Only,
    Some,
    Value,
}

impl fmt::Display for RestrictionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RestrictionKind::Min => "min",
            RestrictionKind::Exactly => "exactly",
            RestrictionKind::Only => "only",
            RestrictionKind::Some => "some",
            RestrictionKind::Value => "value",
        })
    }
}

/// Literal ranges used as restriction fillers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Datatype {
    String,
    Integer,
    /// `xsd:decimal`; integers qualify too.
    Decimal,
    /// Any integer or decimal literal, or a string whose text is a number. Used for
    /// `om:numerical_value`, which the published tables type as `xsd:string`.
    Numeric,
    Boolean,
    DateTime,
    /// `rdfs:Literal`: any literal at all.
    Any,
}

impl Datatype {
    pub fn matches(self, lit: &Literal) -> bool {
        match self {
            Datatype::String => lit.kind() == LiteralKind::String,
            Datatype::Integer => lit.kind() == LiteralKind::Integer,
            Datatype::Decimal => matches!(lit.kind(), LiteralKind::Integer | LiteralKind::Decimal),
            Datatype::Numeric => crate::measures::literal_decimal(lit).is_some(),
            Datatype::Boolean => lit.kind() == LiteralKind::Boolean,
            Datatype::DateTime => lit.kind() == LiteralKind::DateTime,
            Datatype::Any => true,
        }
    }

    pub fn curie(self) -> &'static str {
        match self {
            Datatype::String => "xsd:string",
            Datatype::Integer => "xsd:integer",
            Datatype::Decimal => "xsd:decimal",
            Datatype::Numeric => "xsd:decimal",
            Datatype::Boolean => "xsd:boolean",
            Datatype::DateTime => "xsd:dateTime",
            Datatype::Any => "rdfs:Literal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Filler {
    Class(ClassExpression),
    Datatype(Datatype),
    Term(Term),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Restriction {
    pub property: Iri,
    pub kind: RestrictionKind,
    /// Present exactly for `min` and `exactly`.
    pub cardinality: Option<u32>,
    pub filler: Filler,
}

impl Restriction {
    pub fn min(property: Iri, n: u32, filler: Filler) -> Self {
        Restriction { property, kind: RestrictionKind::Min, cardinality: Some(n), filler }
    }

    pub fn exactly(property: Iri, n: u32, filler: Filler) -> Self {
        Restriction { property, kind: RestrictionKind::Exactly, cardinality: Some(n), filler }
    }

    pub fn only(property: Iri, filler: Filler) -> Self {
        Restriction { property, kind: RestrictionKind::Only, cardinality: None, filler }
    }

    pub fn some(property: Iri, filler: Filler) -> Self {
        Restriction { property, kind: RestrictionKind::Some, cardinality: None, filler }
    }

    pub fn value(property: Iri, value: impl Into<Term>) -> Self {
        Restriction { property, kind: RestrictionKind::Value, cardinality: None, filler: Filler::Term(value.into()) }
    }

    /// Manchester-style rendering, e.g. `gcise:authorizedBy exactly 1 gcise:ServiceProvider`.
    pub fn describe(&self, prefixes: &PrefixMap) -> String {
        let filler = describe_filler(&self.filler, prefixes);
        match self.cardinality {
            Some(n) => format!("{} {} {n} {filler}", prefixes.display(&self.property), self.kind),
            None => format!("{} {} {filler}", prefixes.display(&self.property), self.kind),
        }
    }
}

fn describe_filler(filler: &Filler, prefixes: &PrefixMap) -> String {
    match filler {
        Filler::Class(e) => e.describe(prefixes),
        Filler::Datatype(d) => d.curie().to_string(),
        Filler::Term(Term::Iri(iri)) => prefixes.display(iri),
        Filler::Term(Term::Literal(l)) => l.lexical().to_string(),
        Filler::Term(other) => other.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassExpression {
    Named(Iri),
    UnionOf(Vec<ClassExpression>),
    Restriction(Box<Restriction>),
}

impl ClassExpression {
    pub fn union(classes: impl IntoIterator<Item = Iri>) -> Self {
        ClassExpression::UnionOf(classes.into_iter().map(ClassExpression::Named).collect())
    }

    pub fn describe(&self, prefixes: &PrefixMap) -> String {
        match self {
            ClassExpression::Named(iri) => prefixes.display(iri),
            ClassExpression::UnionOf(members) => {
                let parts: Vec<String> = members.iter().map(|m| m.describe(prefixes)).collect();
                format!("({})", parts.join(" or "))
            }
            ClassExpression::Restriction(r) => format!("({})", r.describe(prefixes)),
        }
    }

    /// Every named class mentioned anywhere in the expression.
    pub fn named_classes(&self) -> Vec<&Iri> {
        match self {
            ClassExpression::Named(iri) => vec![iri],
            ClassExpression::UnionOf(members) => members.iter().flat_map(|m| m.named_classes()).collect(),
            ClassExpression::Restriction(r) => match &r.filler {
                Filler::Class(e) => e.named_classes(),
                _ => Vec::new(),
            },
        }
    }
}

impl From<Iri> for ClassExpression {
    fn from(iri: Iri) -> Self {
        ClassExpression::Named(iri)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::store::vocab::{gcise, gcis, org};

    #[test]
    fn descriptions_read_like_the_tables() {
        let p = PrefixMap::default();
        let r = Restriction::exactly(gcise::iri("authorizedBy"), 1, Filler::Class(gcise::iri("ServiceProvider").into()));
        assert_eq!(r.describe(&p), "gcise:authorizedBy exactly 1 gcise:ServiceProvider");
        let u = Restriction::some(
            gcise::iri("represents_a"),
            Filler::Class(ClassExpression::union([org::iri("Division"), gcis::iri("Household")])),
        );
        assert_eq!(u.describe(&p), "gcise:represents_a some (org:Division or gcis:Household)");
    }

    #[test]
    fn numeric_datatype_accepts_number_strings() {
        assert!(Datatype::Numeric.matches(&Literal::string("2615000")));
        assert!(!Datatype::Numeric.matches(&Literal::string("many")));
        assert!(Datatype::Decimal.matches(&Literal::integer(3)));
        assert!(!Datatype::Integer.matches(&Literal::new("3.5", LiteralKind::Decimal).unwrap()));
    }
}
