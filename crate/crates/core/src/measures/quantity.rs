use std::str::FromStr;

use rust_decimal::Decimal;

use crate::store::vocab::{gci, om, pr, prov};
use crate::store::{Graph, Iri, Literal, LiteralKind, Term};

use super::{registry, Measure, MeasureError};

/// Who measured a value, when, and how. Every field is optional.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MeasurementMeta {
    /// Lexical `xsd:dateTime`.
    pub measured_at: Option<String>,
    pub measured_by: Option<Iri>,
    pub method: Option<String>,
    pub derived_from: Option<Iri>,
}

impl MeasurementMeta {
    pub fn is_empty(&self) -> bool {
        *self == MeasurementMeta::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantity {
    pub node: Term,
    /// First asserted type of the quantity node, `gci:GCI_quantity` when untyped.
    pub kind: Iri,
    pub value: Measure,
    pub for_city: Option<Iri>,
    pub meta: MeasurementMeta,
}

/// Parses an integer or decimal literal. String literals are accepted when their text is
/// a plain number, since several published tables type numeric values as strings.
pub fn literal_decimal(lit: &Literal) -> Option<Decimal> {
    match lit.kind() {
        LiteralKind::Integer | LiteralKind::Decimal | LiteralKind::String => {
            let lex = lit.lexical().trim();
            let lex = lex.strip_prefix('+').unwrap_or(lex);
            if lex.is_empty() || !lex.chars().all(|c| c.is_ascii_digit() || c == '.' || c == '-') {
                return None;
            }
            Decimal::from_str_exact(lex).or_else(|_| Decimal::from_str(lex)).ok()
        }
        _ => None,
    }
}

/// The single object of `node` under either spelling of a property. Both spellings are
/// allowed together only when they agree.
fn either<'g>(
    g: &'g Graph,
    node: &Term,
    canonical: &Iri,
    variant: &Iri,
    name: &'static str,
) -> Result<Option<&'g Term>, MeasureError> {
    let mut values: Vec<&Term> = g.objects(node, canonical).chain(g.objects(node, variant)).collect();
    values.sort();
    values.dedup();
    match values.as_slice() {
        [] => Ok(None),
        [one] => Ok(Some(one)),
        [a, b, ..] => Err(MeasureError::SpellingConflict {
            node: g.display(node),
            property: name,
            a: g.display(a),
            b: g.display(b),
        }),
    }
}

fn unit_of<'g>(g: &'g Graph, node: &Term) -> Result<Option<&'g Term>, MeasureError> {
    either(g, node, &om::iri("unit_of_measure"), &om::iri("unit"), "unit of measure")
}

/// Reads the quantity → measure → (value, unit) chain rooted at `q`.
///
/// The unit may sit on the measure node or on the quantity node; if both carry one they
/// must agree.
pub fn read_quantity(g: &Graph, q: &Term) -> Result<Quantity, MeasureError> {
    let node = g.display(q);
    let links: Vec<&Term> = g.objects(q, &om::iri("value")).collect();
    let measure = match links.as_slice() {
        [] => return Err(MeasureError::MissingValue { node }),
        [m] => *m,
        more => return Err(MeasureError::AmbiguousValue { node, count: more.len() }),
    };
    let numeric = either(g, measure, &om::iri("numerical_value"), &om::iri("numeric_value"), "numerical value")?
        .ok_or_else(|| MeasureError::MissingNumeric { node: g.display(measure) })?;
    let value = numeric.as_literal().and_then(literal_decimal).ok_or_else(|| MeasureError::NonNumeric {
        node: g.display(measure),
        lexical: match numeric {
            Term::Literal(l) => l.lexical().to_string(),
            other => g.display(other),
        },
    })?;

    let unit_term = match (unit_of(g, measure)?, unit_of(g, q)?) {
        (Some(a), Some(b)) if a != b => {
            return Err(MeasureError::SpellingConflict {
                node,
                property: "unit of measure",
                a: g.display(a),
                b: g.display(b),
            })
        }
        (Some(u), _) | (None, Some(u)) => u,
        (None, None) => return Err(MeasureError::MissingUnit { node }),
    };
    let unit = match unit_term {
        Term::Iri(iri) => registry().get(iri)?.clone(),
        other => return Err(MeasureError::UnknownUnit(g.display(other))),
    };

    let kind = g.types(q).next().cloned().unwrap_or_else(|| gci::iri("GCI_quantity"));
    let for_city = g.objects(q, &gci::iri("for_city")).find_map(Term::as_iri).cloned();
    Ok(Quantity {
        node: q.clone(),
        kind,
        value: Measure::new(value, unit)?,
        for_city,
        meta: read_meta(g, q, measure),
    })
}

fn read_meta(g: &Graph, q: &Term, measure: &Term) -> MeasurementMeta {
    let find = |local: &str| -> Option<&Term> {
        [q, measure].into_iter().find_map(|node| {
            g.objects(node, &prov::iri(local)).chain(g.objects(node, &pr::iri(local))).next()
        })
    };
    let iri = |t: Option<&Term>| t.and_then(Term::as_iri).cloned();
    MeasurementMeta {
        measured_at: find("generatedAtTime").and_then(Term::as_literal).map(|l| l.lexical().to_string()),
        measured_by: iri(find("wasAttributedTo")),
        method: find("wasGeneratedBy").map(|t| match t {
            Term::Literal(l) => l.lexical().to_string(),
            other => g.display(other),
        }),
        derived_from: iri(find("wasDerivedFrom")),
    }
}
