use std::collections::BTreeSet;
use std::fmt;

use rust_decimal::Decimal;
use serde::Serialize;

use crate::measures::read_quantity;
use crate::store::vocab::{gcibo, org, rdf};
use crate::store::{Graph, Iri, Term};

use super::expr::{ClassExpression, Filler, Restriction, RestrictionKind};
use super::schema::{BuildingRule, Schema};
use super::OntologyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Severity {
    /// Data disagrees with the schema definition.
    CD,
    /// Data disagrees with itself or with derived values.
    CI,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::CD => "CD",
            Severity::CI => "CI",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub severity: Severity,
    pub instance: Term,
    pub class: Iri,
    /// The restriction, rule or consistency check that failed.
    pub restriction: String,
    /// What the graph actually contains.
    pub observed: String,
}

/// Classes `x` belongs to: its asserted types and all their superclasses.
pub fn entailed_types(g: &Graph, s: &Schema, x: &Term) -> BTreeSet<Iri> {
    g.types(x).flat_map(|t| s.superclasses(t)).collect()
}

pub fn is_instance(g: &Graph, s: &Schema, x: &Term, e: &ClassExpression) -> bool {
    match e {
        ClassExpression::Named(c) => g.types(x).any(|t| s.is_subclass_of(t, c)),
        ClassExpression::UnionOf(members) => members.iter().any(|m| is_instance(g, s, x, m)),
        ClassExpression::Restriction(r) => satisfies(g, s, x, r).is_ok(),
    }
}

/// All members of a class expression, evaluated closed-world over asserted triples.
pub fn instances_of(g: &Graph, s: &Schema, e: &ClassExpression) -> BTreeSet<Term> {
    match e {
        ClassExpression::Named(c) => {
            let classes = s.subclass_closure(c).unwrap_or_else(|_| [c.clone()].into());
            let ty = Term::Iri(rdf::type_());
            classes
                .iter()
                .flat_map(|c| g.match_pattern(None, Some(&ty), Some(&Term::Iri(c.clone()))))
                .map(|t| t.subject.clone())
                .collect()
        }
        ClassExpression::UnionOf(members) => members.iter().flat_map(|m| instances_of(g, s, m)).collect(),
        ClassExpression::Restriction(r) => {
            g.subject_terms().into_iter().filter(|x| satisfies(g, s, x, r).is_ok()).cloned().collect()
        }
    }
}

fn filler_matches(g: &Graph, s: &Schema, value: &Term, filler: &Filler) -> bool {
    match filler {
        Filler::Class(e) => !value.is_literal() && is_instance(g, s, value, e),
        Filler::Datatype(d) => value.as_literal().is_some_and(|l| d.matches(l)),
        Filler::Term(t) => value == t,
    }
}

/// `Ok` when `x` meets `r`; otherwise a description of what was found.
///
/// Cardinalities with a class filler count every value, since closed-world typing of
/// each value is left to that value's own checks; with a datatype filler only literals
/// of that datatype count.
pub fn satisfies(g: &Graph, s: &Schema, x: &Term, r: &Restriction) -> Result<(), String> {
    let values: Vec<&Term> = g.objects(x, &r.property).collect();
    let shown = || {
        let v: Vec<String> = values.iter().map(|t| g.display(t)).collect();
        if v.is_empty() {
            "no values".to_string()
        } else {
            v.join(", ")
        }
    };
    let counted = || match &r.filler {
        Filler::Datatype(_) => values.iter().filter(|v| filler_matches(g, s, v, &r.filler)).count(),
        _ => values.len(),
    };
    match r.kind {
        RestrictionKind::Min => {
            let n = counted();
            let need = r.cardinality.unwrap_or(0) as usize;
            if n >= need {
                Ok(())
            } else {
                Err(format!("{n} value(s): {}", shown()))
            }
        }
        RestrictionKind::Exactly => {
            let n = counted();
            if n == r.cardinality.unwrap_or(0) as usize {
                Ok(())
            } else {
                Err(format!("{n} value(s): {}", shown()))
            }
        }
        RestrictionKind::Only => {
            let bad: Vec<String> =
                values.iter().filter(|v| !filler_matches(g, s, v, &r.filler)).map(|v| g.display(v)).collect();
            if bad.is_empty() {
                Ok(())
            } else {
                Err(format!("outside the range: {}", bad.join(", ")))
            }
        }
        RestrictionKind::Some => {
            if values.iter().any(|v| filler_matches(g, s, v, &r.filler)) {
                Ok(())
            } else {
                Err(format!("no qualifying value ({})", shown()))
            }
        }
        RestrictionKind::Value => {
            if values.iter().any(|v| filler_matches(g, s, v, &r.filler)) {
                Ok(())
            } else {
                Err(shown())
            }
        }
    }
}

/// Closed-world check of `x` against every restriction that applies to class `c`, plus
/// the floor-area rule when `c` is a residential building class.
pub fn check_instance(g: &Graph, s: &Schema, x: &Term, c: &Iri) -> Result<Vec<Violation>, OntologyError> {
    if !s.contains_class(c) {
        return Err(OntologyError::UnknownClass(c.as_str().to_string()));
    }
    let prefixes = g.prefixes();
    let mut out = Vec::new();
    for (owner, r) in s.effective_restrictions(c) {
        if let Err(observed) = satisfies(g, s, x, r) {
            out.push(Violation {
                severity: Severity::CD,
                instance: x.clone(),
                class: owner.clone(),
                restriction: r.describe(prefixes),
                observed,
            });
        }
    }
    for owner in s.superclasses(c) {
        if s.rule(&owner) != Some(BuildingRule::ResidentialFloorArea) {
            continue;
        }
        let observed = match residential_share(g, x) {
            Ok(Some((res, total))) if res * Decimal::TWO > total => continue,
            Ok(Some((res, total))) => format!("{res} of {total} m2 residential"),
            Ok(None) => "no residential floor area".to_string(),
            Err(e) => e.to_string(),
        };
        out.push(Violation {
            severity: Severity::CD,
            instance: x.clone(),
            class: owner.clone(),
            restriction: BuildingRule::ResidentialFloorArea.description().to_string(),
            observed,
        });
    }
    Ok(out)
}

/// `(residential, total)` floor area of building `b`. `None` when no residential area
/// is recorded.
fn residential_share(g: &Graph, b: &Term) -> Result<Option<(Decimal, Decimal)>, OntologyError> {
    let area = |property: &str| -> Result<Option<Decimal>, OntologyError> {
        let mut it = g.objects(b, &gcibo::iri(property));
        let Some(q) = it.next() else { return Ok(None) };
        if it.next().is_some() {
            return Err(OntologyError::FloorArea {
                building: g.display(b),
                reason: format!("several gcibo:{property} values"),
            });
        }
        read_quantity(g, q)
            .map(|q| Some(q.value.value))
            .map_err(|e| OntologyError::FloorArea { building: g.display(b), reason: e.to_string() })
    };
    let total = area("hasFloorArea")?.ok_or_else(|| OntologyError::FloorArea {
        building: g.display(b),
        reason: "no gcibo:hasFloorArea".into(),
    })?;
    if total <= Decimal::ZERO {
        return Err(OntologyError::FloorArea { building: g.display(b), reason: "total floor area is zero".into() });
    }
    Ok(area("hasResFloorArea")?.map(|res| (res, total)))
}

/// Classes a building earns by rule: `ResidentialBuilding` when strictly more than
/// half its floor area is residential, `PublicBuilding` when an `org:has_Ownership`
/// value is a government organization. A building may earn both.
pub fn classify_building(g: &Graph, s: &Schema, b: &Term) -> Result<BTreeSet<Iri>, OntologyError> {
    let building = gcibo::iri("Building");
    if !g.types(b).any(|t| s.is_subclass_of(t, &building)) {
        return Err(OntologyError::NotABuilding(g.display(b)));
    }
    let mut out = BTreeSet::new();
    if let Some((res, total)) = residential_share(g, b)? {
        if res * Decimal::TWO > total {
            out.insert(gcibo::iri("ResidentialBuilding"));
        }
    }
    let government = ClassExpression::Named(org::iri("GovernmentOrganization"));
    if g.objects(b, &org::iri("has_Ownership")).any(|o| is_instance(g, s, o, &government)) {
        out.insert(gcibo::iri("PublicBuilding"));
    }
    Ok(out)
}

/// Checks every instance against every schema class it is asserted to belong to.
/// Types outside the schema (external vocabulary such as `ic:Address`) are skipped.
/// The result is sorted and free of duplicates.
pub fn validate_graph(g: &Graph, s: &Schema) -> Vec<Violation> {
    let mut out = BTreeSet::new();
    for x in g.subject_terms() {
        for c in g.types(x) {
            if let Ok(found) = check_instance(g, s, x, c) {
                out.extend(found);
            }
        }
    }
    out.into_iter().collect()
}
