use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use rust_decimal::Decimal;
use serde::Serialize;

use crate::measures::{literal_decimal, round_ratio};
use crate::ontology::{entailed_types, Schema};
use crate::store::vocab::{rdf, rdfs};
use crate::store::{Graph, Literal, LiteralKind, PrefixMap, Term};

use super::parse::{ArithOp, CompareOp, Expr, Filter, PatternTerm, Projection, Query, TriplePattern};
use super::QueryError;

type Binding = BTreeMap<String, Term>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Term>>,
}

/// JSON shape of a result table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// A cell as printed: compact IRI, literal text, or blank node label.
pub fn cell_text(prefixes: &PrefixMap, t: &Term) -> String {
    match t {
        Term::Iri(i) => prefixes.display(i),
        Term::Literal(l) => l.lexical().to_string(),
        Term::BlankNode(b) => format!("_:{b}"),
    }
}

impl ResultTable {
    pub fn report(&self, prefixes: &PrefixMap) -> TableReport {
        TableReport {
            columns: self.columns.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|t| cell_text(prefixes, t)).collect()).collect(),
        }
    }

    /// Left-aligned columns separated by two spaces, header first.
    pub fn render(&self, prefixes: &PrefixMap) -> String {
        let report = self.report(prefixes);
        let mut widths: Vec<usize> = report.columns.iter().map(|c| c.chars().count()).collect();
        for row in &report.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = line(&report.columns);
        out.push('\n');
        for row in &report.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }
}

pub fn execute(g: &Graph, s: &Schema, q: &Query) -> Result<ResultTable, QueryError> {
    let axioms: Vec<(Term, Term)> = if q.patterns.iter().any(|p| is_const(&p.predicate, &Term::Iri(rdfs::iri("subClassOf")))) {
        s.subclass_axioms().map(|(c, p)| (Term::Iri(c.clone()), Term::Iri(p.clone()))).collect()
    } else {
        Vec::new()
    };
    let mut rows = vec![Binding::new()];
    for p in &q.patterns {
        rows = rows.iter().flat_map(|b| match_pattern(g, s, &axioms, p, b)).collect();
        if rows.is_empty() {
            break;
        }
    }
    rows.retain(|b| q.filters.iter().all(|f| keep(f, b)));

    let columns: Vec<String> = q.projection.iter().map(|p| p.column().to_string()).collect();
    let mut out: Vec<Vec<Term>> = if q.is_aggregate() { aggregate(q, &rows)? } else { project(q, &rows)? };
    if q.distinct {
        let unique: BTreeSet<Vec<Term>> = out.into_iter().collect();
        out = unique.into_iter().collect();
    }
    out.sort_by_cached_key(|r| r.iter().map(Term::to_string).collect::<Vec<_>>());
    Ok(ResultTable { columns, rows: out })
}

fn is_const(pt: &PatternTerm, t: &Term) -> bool {
    matches!(pt, PatternTerm::Const(c) if c == t)
}

fn resolve<'a>(pt: &'a PatternTerm, b: &'a Binding) -> Option<&'a Term> {
    match pt {
        PatternTerm::Const(t) => Some(t),
        PatternTerm::Var(v) => b.get(v),
    }
}

fn bind(b: &mut Binding, pt: &PatternTerm, t: &Term) -> bool {
    match pt {
        PatternTerm::Const(c) => c == t,
        PatternTerm::Var(v) => match b.get(v) {
            Some(existing) => existing == t,
            None => {
                b.insert(v.clone(), t.clone());
                true
            }
        },
    }
}

fn extend(b: &Binding, p: &TriplePattern, s: &Term, pr: &Term, o: &Term) -> Option<Binding> {
    let mut out = b.clone();
    (bind(&mut out, &p.subject, s) && bind(&mut out, &p.predicate, pr) && bind(&mut out, &p.object, o)).then_some(out)
}

/// Matches one pattern under a partial binding. `rdf:type` goes through the subclass
/// closure and `rdfs:subClassOf` also sees the schema's axioms.
fn match_pattern(g: &Graph, s: &Schema, axioms: &[(Term, Term)], p: &TriplePattern, b: &Binding) -> Vec<Binding> {
    let (subj, pred, obj) = (resolve(&p.subject, b), resolve(&p.predicate, b), resolve(&p.object, b));
    let ty = Term::Iri(rdf::type_());
    if pred == Some(&ty) {
        let subjects: Vec<&Term> = match subj {
            Some(x) => vec![x],
            None => match obj {
                Some(Term::Iri(c)) => {
                    let classes = s.subclass_closure(c).unwrap_or_else(|_| [c.clone()].into());
                    let found: BTreeSet<&Term> = classes
                        .iter()
                        .flat_map(|k| g.match_pattern(None, Some(&ty), Some(&Term::Iri(k.clone()))))
                        .map(|t| &t.subject)
                        .collect();
                    found.into_iter().collect()
                }
                Some(_) => Vec::new(),
                None => g.match_pattern(None, Some(&ty), None).into_iter().map(|t| &t.subject).collect::<BTreeSet<_>>().into_iter().collect(),
            },
        };
        return subjects
            .into_iter()
            .flat_map(|x| {
                entailed_types(g, s, x)
                    .into_iter()
                    .filter(|c| obj.is_none_or(|o| *o == Term::Iri(c.clone())))
                    .filter_map(|c| extend(b, p, x, &ty, &Term::Iri(c)))
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let mut out: Vec<Binding> =
        g.match_pattern(subj, pred, obj).into_iter().filter_map(|t| extend(b, p, &t.subject, &t.predicate, &t.object)).collect();
    let sub = Term::Iri(rdfs::iri("subClassOf"));
    if pred == Some(&sub) {
        for (c, parent) in axioms {
            if subj.is_none_or(|x| x == c) && obj.is_none_or(|o| o == parent) {
                out.extend(extend(b, p, c, &sub, parent));
            }
        }
        out.sort();
        out.dedup();
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Num(Decimal),
    Term(Term),
}

fn numeric(t: &Term) -> Option<Decimal> {
    t.as_literal().filter(|l| l.kind() != LiteralKind::Boolean).and_then(literal_decimal)
}

fn eval(e: &Expr, b: &Binding) -> Result<Value, QueryError> {
    match e {
        Expr::Var(v) => {
            let t = b.get(v).ok_or_else(|| QueryError::Unbound(v.clone()))?;
            Ok(numeric(t).map_or_else(|| Value::Term(t.clone()), Value::Num))
        }
        Expr::Const(t) => Ok(numeric(t).map_or_else(|| Value::Term(t.clone()), Value::Num)),
        Expr::Neg(inner) => Ok(Value::Num(-number(inner, b)?)),
        Expr::Binary(l, op, r) => {
            let (x, y) = (number(l, b)?, number(r, b)?);
            let v = match op {
                ArithOp::Add => x.checked_add(y),
                ArithOp::Sub => x.checked_sub(y),
                ArithOp::Mul => x.checked_mul(y),
                ArithOp::Div => {
                    if y.is_zero() {
                        return Err(QueryError::DivisionByZero);
                    }
                    x.checked_div(y).map(round_ratio)
                }
            };
            v.map(Value::Num).ok_or(QueryError::Overflow)
        }
    }
}

fn number(e: &Expr, b: &Binding) -> Result<Decimal, QueryError> {
    match eval(e, b)? {
        Value::Num(n) => Ok(n),
        Value::Term(t) => Err(QueryError::NonNumeric(t.to_string())),
    }
}

fn keep(f: &Filter, b: &Binding) -> bool {
    match f {
        Filter::TextMatch { var, pattern } => match b.get(var) {
            Some(Term::Literal(l)) => l.lexical().contains(pattern.as_str()),
            Some(Term::Iri(i)) => i.as_str().contains(pattern.as_str()),
            _ => false,
        },
        Filter::Comparison { left, op, right } => {
            let (Ok(l), Ok(r)) = (eval(left, b), eval(right, b)) else { return false };
            let ord = match (&l, &r) {
                (Value::Num(x), Value::Num(y)) => Some(x.cmp(y)),
                (Value::Term(Term::Literal(x)), Value::Term(Term::Literal(y))) => Some(x.lexical().cmp(y.lexical())),
                _ => None,
            };
            match op {
                CompareOp::Eq => ord.map_or(l == r, Ordering::is_eq),
                CompareOp::Ne => ord.map_or(l != r, Ordering::is_ne),
                CompareOp::Lt => ord.is_some_and(Ordering::is_lt),
                CompareOp::Le => ord.is_some_and(Ordering::is_le),
                CompareOp::Gt => ord.is_some_and(Ordering::is_gt),
                CompareOp::Ge => ord.is_some_and(Ordering::is_ge),
            }
        }
    }
}

fn number_term(n: Decimal) -> Term {
    let n = n.normalize();
    let kind = if n.fract().is_zero() { LiteralKind::Integer } else { LiteralKind::Decimal };
    Term::Literal(Literal::new(n.to_string(), kind).expect("decimal text is a valid literal"))
}

fn value_term(v: Value) -> Term {
    match v {
        Value::Num(n) => number_term(n),
        Value::Term(t) => t,
    }
}

fn project(q: &Query, rows: &[Binding]) -> Result<Vec<Vec<Term>>, QueryError> {
    rows.iter()
        .map(|b| {
            q.projection
                .iter()
                .map(|p| match p {
                    Projection::Var(v) => b.get(v).cloned().ok_or_else(|| QueryError::Unbound(v.clone())),
                    Projection::Expr { expr, .. } => eval(expr, b).map(value_term),
                    Projection::Count { .. } => unreachable!("aggregate queries are handled separately"),
                })
                .collect()
        })
        .collect()
}

/// Groups rows by the plain variables of the projection and counts within each group.
fn aggregate(q: &Query, rows: &[Binding]) -> Result<Vec<Vec<Term>>, QueryError> {
    let keys: Vec<&str> =
        q.projection.iter().filter_map(|p| if let Projection::Var(v) = p { Some(v.as_str()) } else { None }).collect();
    let mut groups: BTreeMap<Vec<Option<Term>>, Vec<&Binding>> = BTreeMap::new();
    for b in rows {
        groups.entry(keys.iter().map(|k| b.get(*k).cloned()).collect()).or_default().push(b);
    }
    if groups.is_empty() && keys.is_empty() {
        groups.insert(Vec::new(), Vec::new());
    }
    groups
        .values()
        .map(|members| {
            q.projection
                .iter()
                .map(|p| match p {
                    Projection::Var(v) => {
                        members[0].get(v).cloned().ok_or_else(|| QueryError::Unbound(v.clone()))
                    }
                    Projection::Expr { expr, .. } => match members.first() {
                        Some(b) => eval(expr, b).map(value_term),
                        None => Err(QueryError::Unbound(expr.vars().first().copied().unwrap_or("").to_string())),
                    },
                    Projection::Count { var, distinct, .. } => {
                        let n = match (var, distinct) {
                            (None, false) => members.len(),
                            (None, true) => members.iter().collect::<BTreeSet<_>>().len(),
                            (Some(v), false) => members.iter().filter(|b| b.contains_key(v)).count(),
                            (Some(v), true) => members.iter().filter_map(|b| b.get(v)).collect::<BTreeSet<_>>().len(),
                        };
                        Ok(number_term(Decimal::from(n)))
                    }
                })
                .collect()
        })
        .collect()
}
