use std::fmt;

use thiserror::Error;

use super::vocab::{rdf, xsd};

/// An absolute IRI. Equality is byte equality of the absolute form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(String);

impl Iri {
    /// Wraps an absolute IRI string. Anything without a scheme separator is rejected.
    pub fn new(value: impl Into<String>) -> Result<Self, TermError> {
        let value = value.into();
        if !is_absolute_iri(&value) {
            return Err(TermError::RelativeIri(value));
        }
        Ok(Iri(value))
    }

    /// Builds an IRI from a namespace and a local name without validation.
    /// Used for the built-in vocabularies whose namespaces are known to be absolute.
    pub(crate) fn from_parts(namespace: &str, local: &str) -> Self {
        Iri(format!("{namespace}{local}"))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

pub(crate) fn is_absolute_iri(value: &str) -> bool {
    let Some((scheme, _)) = value.split_once(':') else {
        return false;
    };
    let mut chars = scheme.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
        && !value.chars().any(|c| c.is_whitespace() || matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '\\' | '^' | '`'))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LiteralKind {
    String,
    Integer,
    Decimal,
    Boolean,
    DateTime,
}

impl LiteralKind {
    pub fn datatype(self) -> Iri {
        match self {
            LiteralKind::String => xsd::string(),
            LiteralKind::Integer => xsd::integer(),
            LiteralKind::Decimal => xsd::decimal(),
            LiteralKind::Boolean => xsd::boolean(),
            LiteralKind::DateTime => xsd::date_time(),
        }
    }

    /// Maps an XSD datatype IRI onto the supported literal kinds.
    pub fn from_datatype(datatype: &Iri) -> Option<Self> {
        let local = datatype.as_str().strip_prefix(xsd::NS)?;
        Some(match local {
            "string" => LiteralKind::String,
            "integer" | "int" | "long" | "short" | "nonNegativeInteger" | "positiveInteger"
            | "nonPositiveInteger" | "negativeInteger" | "unsignedInt" | "unsignedLong" => {
                LiteralKind::Integer
            }
            "decimal" => LiteralKind::Decimal,
            "boolean" => LiteralKind::Boolean,
            "dateTime" => LiteralKind::DateTime,
            _ => return None,
        })
    }
}

impl fmt::Display for LiteralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LiteralKind::String => "string",
            LiteralKind::Integer => "integer",
            LiteralKind::Decimal => "decimal",
            LiteralKind::Boolean => "boolean",
            LiteralKind::DateTime => "dateTime",
        };
        f.write_str(name)
    }
}

/// A typed literal. The lexical form is validated against its kind on construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    lexical: String,
    kind: LiteralKind,
}

impl Literal {
    pub fn new(lexical: impl Into<String>, kind: LiteralKind) -> Result<Self, TermError> {
        let lexical = lexical.into();
        let valid = match kind {
            LiteralKind::String => true,
            LiteralKind::Integer => is_integer_lexical(&lexical),
            LiteralKind::Decimal => is_decimal_lexical(&lexical),
            LiteralKind::Boolean => lexical == "true" || lexical == "false",
            LiteralKind::DateTime => is_date_time_lexical(&lexical),
        };
        if !valid {
            return Err(TermError::InvalidLexical { lexical, kind });
        }
        Ok(Literal { lexical, kind })
    }

    pub fn string(value: impl Into<String>) -> Self {
        Literal { lexical: value.into(), kind: LiteralKind::String }
    }

    pub fn integer(value: i64) -> Self {
        Literal { lexical: value.to_string(), kind: LiteralKind::Integer }
    }

    pub fn boolean(value: bool) -> Self {
        Literal { lexical: value.to_string(), kind: LiteralKind::Boolean }
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn kind(&self) -> LiteralKind {
        self.kind
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self.kind, LiteralKind::Integer | LiteralKind::Decimal)
    }

    pub fn as_bool(&self) -> Option<bool> {
        match (self.kind, self.lexical.as_str()) {
            (LiteralKind::Boolean, "true") => Some(true),
            (LiteralKind::Boolean, "false") => Some(false),
            _ => None,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LiteralKind::String => write!(f, "\"{}\"", escape_string(&self.lexical)),
            LiteralKind::Integer | LiteralKind::Decimal | LiteralKind::Boolean => {
                f.write_str(&self.lexical)
            }
            LiteralKind::DateTime => {
                write!(f, "\"{}\"^^<{}>", self.lexical, self.kind.datatype().as_str())
            }
        }
    }
}

pub(crate) fn is_integer_lexical(s: &str) -> bool {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

pub(crate) fn is_decimal_lexical(s: &str) -> bool {
    let body = s.strip_prefix(['+', '-']).unwrap_or(s);
    match body.split_once('.') {
        None => is_integer_lexical(body),
        Some((int, frac)) => {
            (!int.is_empty() || !frac.is_empty())
                && int.bytes().all(|b| b.is_ascii_digit())
                && frac.bytes().all(|b| b.is_ascii_digit())
        }
    }
}

/// `YYYY-MM-DDThh:mm:ss[.fff][Z|(+|-)hh:mm]`
pub(crate) fn is_date_time_lexical(s: &str) -> bool {
    fn num(s: &str, range: std::ops::RangeInclusive<u32>) -> bool {
        s.bytes().all(|b| b.is_ascii_digit()) && s.parse::<u32>().is_ok_and(|v| range.contains(&v))
    }
    let Some((date, time)) = s.split_once('T') else {
        return false;
    };
    let date = date.strip_prefix('-').unwrap_or(date);
    let parts: Vec<&str> = date.split('-').collect();
    if parts.len() != 3 || parts[0].len() < 4 || parts[1].len() != 2 || parts[2].len() != 2 {
        return false;
    }
    if !(num(parts[0], 0..=u32::MAX) && num(parts[1], 1..=12) && num(parts[2], 1..=31)) {
        return false;
    }
    let (clock, zone) = match time.find(['Z', '+', '-']) {
        Some(i) => time.split_at(i),
        None => (time, ""),
    };
    let zone_ok = match zone {
        "" | "Z" => true,
        z => {
            let z = &z[1..];
            z.len() == 5 && &z[2..3] == ":" && num(&z[..2], 0..=14) && num(&z[3..], 0..=59)
        }
    };
    let (hms, frac) = match clock.split_once('.') {
        Some((hms, frac)) => (hms, Some(frac)),
        None => (clock, None),
    };
    let hms: Vec<&str> = hms.split(':').collect();
    zone_ok
        && hms.len() == 3
        && hms.iter().all(|p| p.len() == 2)
        && num(hms[0], 0..=24)
        && num(hms[1], 0..=59)
        && num(hms[2], 0..=60)
        && frac.is_none_or(|f| !f.is_empty() && f.bytes().all(|b| b.is_ascii_digit()))
}

pub(crate) fn escape_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 || c == '\u{7f}' => out.push_str(&format!("\\u{:04X}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// A node of the graph. Variant order fixes the deterministic sort: IRIs, then blank
/// nodes, then literals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Iri(Iri),
    BlankNode(String),
    Literal(Literal),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(lit) => Some(lit),
            _ => None,
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal(_))
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<&Iri> for Term {
    fn from(iri: &Iri) -> Self {
        Term::Iri(iri.clone())
    }
}

impl From<Literal> for Term {
    fn from(lit: Literal) -> Self {
        Term::Literal(lit)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(iri) => iri.fmt(f),
            Term::BlankNode(label) => write!(f, "_:{label}"),
            Term::Literal(lit) => lit.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub subject: Term,
    pub predicate: Term,
    pub object: Term,
}

impl Triple {
    /// Checks the positional rules: no literal subjects, predicates are IRIs.
    pub fn new(
        subject: impl Into<Term>,
        predicate: impl Into<Term>,
        object: impl Into<Term>,
    ) -> Result<Self, TermError> {
        let (subject, predicate, object) = (subject.into(), predicate.into(), object.into());
        if subject.is_literal() {
            return Err(TermError::LiteralSubject(subject.to_string()));
        }
        if !matches!(predicate, Term::Iri(_)) {
            return Err(TermError::NonIriPredicate(predicate.to_string()));
        }
        Ok(Triple { subject, predicate, object })
    }

    /// `subject rdf:type class`
    pub fn typed(subject: &Iri, class: &Iri) -> Self {
        Triple {
            subject: subject.into(),
            predicate: rdf::type_().into(),
            object: class.into(),
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("not an absolute IRI: {0:?}")]
    RelativeIri(String),
    #[error("invalid {kind} literal: {lexical:?}")]
    InvalidLexical { lexical: String, kind: LiteralKind },
    #[error("literal in subject position: {0}")]
    LiteralSubject(String),
    #[error("predicate must be an IRI, found {0}")]
    NonIriPredicate(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_lexical_forms_are_checked() {
        assert!(Literal::new("12", LiteralKind::Integer).is_ok());
        assert!(Literal::new("-0012", LiteralKind::Integer).is_ok());
        assert!(Literal::new("1.5", LiteralKind::Integer).is_err());
        assert!(Literal::new("5,073", LiteralKind::Decimal).is_err());
        assert!(Literal::new(".5", LiteralKind::Decimal).is_ok());
        assert!(Literal::new("True", LiteralKind::Boolean).is_err());
        assert!(Literal::new("true", LiteralKind::Boolean).is_ok());
        assert!(Literal::new("2016-01-31T00:00:00", LiteralKind::DateTime).is_ok());
        assert!(Literal::new("2016-01-31T10:20:30.5-05:00", LiteralKind::DateTime).is_ok());
        assert!(Literal::new("2016-13-01T00:00:00", LiteralKind::DateTime).is_err());
        assert!(Literal::new("2016-01-31", LiteralKind::DateTime).is_err());
    }

    #[test]
    fn positional_rules() {
        let iri = Iri::new("http://x/a").unwrap();
        let lit = Literal::string("s");
        assert!(Triple::new(lit.clone(), iri.clone(), iri.clone()).is_err());
        assert!(Triple::new(iri.clone(), Term::BlankNode("b".into()), iri.clone()).is_err());
        assert!(Triple::new(iri.clone(), iri.clone(), lit).is_ok());
        assert!(Triple::new(Term::BlankNode("b".into()), iri.clone(), iri).is_ok());
    }

    #[test]
    fn relative_iris_rejected() {
        assert!(Iri::new("foo/bar").is_err());
        assert!(Iri::new("http://x/ y").is_err());
        assert!(Iri::new("urn:x").is_ok());
    }
}
