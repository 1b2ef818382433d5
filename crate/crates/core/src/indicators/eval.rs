use std::collections::BTreeSet;

use rust_decimal::Decimal;

use crate::measures::units::{self, Unit};
use crate::measures::{literal_decimal, multiply, read_quantity, Measure};
use crate::ontology::{instances_of, ClassExpression, Schema, Severity, Violation};
use crate::store::vocab::{gci, gcise, ic};
use crate::store::{Graph, Iri, Term};

use super::defs::{variable_binding, AggregateExpr, PopulationSpec, VariableBinding};
use super::IndicatorError;

/// What to do with a population member whose variable cannot be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MissingPolicy {
    /// Fail, listing every offending member.
    #[default]
    Strict,
    /// Leave the member out and report a warning.
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub member: Term,
    pub contribution: Decimal,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub measure: Measure,
    pub trace: Vec<TraceEntry>,
    pub warnings: Vec<Violation>,
}

/// True when `x` reaches `city` through `gci:located_in`, `gci:for_city`, `ic:hasCity`,
/// or an address (`ic:hasAddress`, `gcise:hasServiceAddress`) whose `ic:hasCity` is it.
pub fn in_city(g: &Graph, x: &Term, city: &Iri) -> bool {
    let city = Term::Iri(city.clone());
    let direct = |t: &Term| {
        [gci::iri("located_in"), gci::iri("for_city"), ic::iri("hasCity")]
            .iter()
            .any(|p| g.objects(t, p).any(|o| *o == city))
    };
    direct(x)
        || [ic::iri("hasAddress"), gcise::iri("hasServiceAddress")]
            .iter()
            .any(|p| g.objects(x, p).any(|a| g.objects(a, &ic::iri("hasCity")).any(|o| *o == city)))
}

pub fn eval_population(g: &Graph, s: &Schema, p: &PopulationSpec) -> BTreeSet<Term> {
    instances_of(g, s, &p.defined_by)
        .into_iter()
        .filter(|m| p.filters.iter().all(|(prop, v)| g.objects(m, prop).any(|o| o == v)))
        .filter(|m| p.located_in.as_ref().is_none_or(|c| in_city(g, m, c)))
        .collect()
}

/// Evaluates with the strict policy and no city scope beyond the populations' own.
pub fn eval_aggregate(g: &Graph, s: &Schema, e: &AggregateExpr) -> Result<Measure, IndicatorError> {
    Evaluator::new(g, s).eval(e).map(|ev| ev.measure)
}

/// Evaluation context: the graph, the schema, an optional city applied to every
/// population that has none, and the missing-data policy.
#[derive(Clone, Copy)]
pub struct Evaluator<'a> {
    pub g: &'a Graph,
    pub s: &'a Schema,
    pub city: Option<&'a Iri>,
    pub policy: MissingPolicy,
}

impl<'a> Evaluator<'a> {
    pub fn new(g: &'a Graph, s: &'a Schema) -> Self {
        Evaluator { g, s, city: None, policy: MissingPolicy::Strict }
    }

    pub fn in_city(self, city: &'a Iri) -> Self {
        Evaluator { city: Some(city), ..self }
    }

    pub fn with_policy(self, policy: MissingPolicy) -> Self {
        Evaluator { policy, ..self }
    }

    pub fn population(&self, p: &PopulationSpec) -> BTreeSet<Term> {
        match (&p.located_in, self.city) {
            (None, Some(c)) => eval_population(self.g, self.s, &p.clone().in_city(c.clone())),
            _ => eval_population(self.g, self.s, p),
        }
    }

    pub fn eval(&self, e: &AggregateExpr) -> Result<Evaluation, IndicatorError> {
        match e {
            AggregateExpr::Sum { population, variable } => self.sum(population, variable),
            AggregateExpr::Cardinality { population } => {
                let members = self.population(population);
                let trace = members
                    .into_iter()
                    .map(|member| TraceEntry { member, contribution: Decimal::ONE, note: None })
                    .collect::<Vec<_>>();
                let measure = count_measure(trace.len())?;
                Ok(Evaluation { measure, trace, warnings: Vec::new() })
            }
            AggregateExpr::Product { term1, term2, unit } => {
                let (a, b) = (self.eval(term1)?, self.eval(term2)?);
                let measure = multiply(&a.measure, &b.measure, &units::unit(unit))
                    .map_err(|source| IndicatorError::Measure { context: "product".into(), source })?;
                let factor = a.measure.value;
                let trace = b
                    .trace
                    .into_iter()
                    .map(|t| TraceEntry { contribution: (t.contribution * factor).normalize(), ..t })
                    .collect();
                let mut warnings = a.warnings;
                warnings.extend(b.warnings);
                Ok(Evaluation { measure, trace, warnings })
            }
            AggregateExpr::QuantityRef { kind } => {
                let q = self.quantity_of_kind(kind)?;
                let trace = vec![TraceEntry { member: q.0.clone(), contribution: q.1.value, note: None }];
                Ok(Evaluation { measure: q.1, trace, warnings: Vec::new() })
            }
            AggregateExpr::CityPopulationSize => {
                let city = self.city.ok_or(IndicatorError::NoCity)?;
                let size = city_population_size(self.g, self.s, city)?;
                let (member, note) = match &size.asserted {
                    Some(node) => (node.clone(), None),
                    None => (Term::Iri(city.clone()), Some(format!("{} residents counted", size.residents))),
                };
                let trace = vec![TraceEntry { member, contribution: size.measure.value, note }];
                Ok(Evaluation { measure: size.measure, trace, warnings: Vec::new() })
            }
        }
    }

    fn sum(&self, population: &PopulationSpec, variable: &Iri) -> Result<Evaluation, IndicatorError> {
        let binding = variable_binding(self.s, variable)?;
        let mut total = Decimal::ZERO;
        let mut trace = Vec::new();
        let mut problems = Vec::new();
        let mut warnings = Vec::new();
        for member in self.population(population) {
            match resolve(self.g, &member, &binding) {
                Ok(v) => {
                    total = total.checked_add(v).ok_or(IndicatorError::Overflow)?;
                    trace.push(TraceEntry { member, contribution: v, note: None });
                }
                Err(reason) => {
                    let shown = self.g.display(&member);
                    match self.policy {
                        MissingPolicy::Strict => problems.push(format!("{shown}: {reason}")),
                        MissingPolicy::Skip => {
                            warnings.push(Violation {
                                severity: Severity::CD,
                                instance: member.clone(),
                                class: variable.clone(),
                                restriction: format!(
                                    "{} resolves to one numeric value",
                                    self.g.prefixes().display(variable)
                                ),
                                observed: reason.clone(),
                            });
                            trace.push(TraceEntry {
                                member,
                                contribution: Decimal::ZERO,
                                note: Some(format!("skipped: {reason}")),
                            });
                        }
                    }
                }
            }
        }
        if !problems.is_empty() {
            return Err(IndicatorError::MemberData {
                variable: self.g.prefixes().display(variable),
                members: problems,
            });
        }
        let measure = Measure::new(total, binding.unit)
            .map_err(|source| IndicatorError::Measure { context: "sum".into(), source })?;
        Ok(Evaluation { measure, trace, warnings })
    }

    /// The single instance of `kind` scoped to the evaluation city.
    fn quantity_of_kind(&self, kind: &Iri) -> Result<(Term, Measure), IndicatorError> {
        let candidates: Vec<Term> = instances_of(self.g, self.s, &ClassExpression::Named(kind.clone()))
            .into_iter()
            .filter(|q| self.city.is_none_or(|c| in_city(self.g, q, c)))
            .collect();
        let shown = || self.g.prefixes().display(kind);
        match candidates.as_slice() {
            [] => Err(IndicatorError::MissingQuantity { kind: shown() }),
            [q] => {
                let read = read_quantity(self.g, q)
                    .map_err(|source| IndicatorError::Measure { context: self.g.display(q), source })?;
                Ok((q.clone(), read.value))
            }
            _ => Err(IndicatorError::AmbiguousQuantity { kind: shown(), count: candidates.len() }),
        }
    }
}

fn count_measure(n: usize) -> Result<Measure, IndicatorError> {
    Measure::new(Decimal::from(n), units::unit(&units::population_cardinality_unit()))
        .map_err(|source| IndicatorError::Measure { context: "count".into(), source })
}

/// Reads `binding` off `member`, returning why not when it cannot.
pub fn resolve(g: &Graph, member: &Term, binding: &VariableBinding) -> Result<Decimal, String> {
    let mut at = member.clone();
    for p in &binding.property_path {
        let values: Vec<&Term> = g.objects(&at, p).collect();
        at = match values.as_slice() {
            [] => return Err(format!("no {}", g.prefixes().display(p))),
            [v] => (*v).clone(),
            _ => return Err(format!("{} values for {}", values.len(), g.prefixes().display(p))),
        };
    }
    match &at {
        Term::Literal(l) => literal_decimal(l).ok_or_else(|| format!("{:?} is not numeric", l.lexical())),
        node => {
            let q = read_quantity(g, node).map_err(|e| e.to_string())?;
            check_unit(&q.value.unit, &binding.unit)?;
            Ok(q.value.value)
        }
    }
}

fn check_unit(found: &Unit, expected: &Unit) -> Result<(), String> {
    if found.id == expected.id {
        Ok(())
    } else {
        Err(format!("unit {} where {} expected", found.symbol, expected.symbol))
    }
}

/// Where a city's population size came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PopulationSize {
    pub measure: Measure,
    /// The `gci:City_Population_Size` node used, when one was asserted.
    pub asserted: Option<Term>,
    /// `gci:Resident` instances located in the city.
    pub residents: usize,
}

impl PopulationSize {
    /// True when both sources exist and give different numbers.
    pub fn disagrees(&self) -> bool {
        self.asserted.is_some() && self.residents > 0 && self.measure.value != Decimal::from(self.residents)
    }
}

/// An asserted `gci:City_Population_Size` for the city wins; otherwise residents are
/// counted.
pub fn city_population_size(g: &Graph, s: &Schema, city: &Iri) -> Result<PopulationSize, IndicatorError> {
    let residents = eval_population(g, s, &PopulationSpec::of(gci::iri("Resident")).in_city(city.clone())).len();
    let sizes: Vec<Term> = instances_of(g, s, &ClassExpression::Named(gci::iri("City_Population_Size")))
        .into_iter()
        .filter(|q| in_city(g, q, city) || g.objects(q, &gci::iri("cardinality_of")).any(|p| in_city(g, p, city)))
        .collect();
    let mut read = Vec::new();
    for q in &sizes {
        let quantity =
            read_quantity(g, q).map_err(|source| IndicatorError::Measure { context: g.display(q), source })?;
        if !quantity.value.unit.is_cardinality() {
            return Err(IndicatorError::NotACount { node: g.display(q), unit: quantity.value.unit.to_string() });
        }
        read.push((q.clone(), quantity.value));
    }
    read.dedup_by(|a, b| a.1 == b.1);
    match read.as_slice() {
        [] if residents == 0 => Err(IndicatorError::NoPopulation { city: g.prefixes().display(city) }),
        [] => Ok(PopulationSize { measure: count_measure(residents)?, asserted: None, residents }),
        [(node, m)] => Ok(PopulationSize { measure: m.clone(), asserted: Some(node.clone()), residents }),
        _ => Err(IndicatorError::AmbiguousQuantity { kind: "gci:City_Population_Size".into(), count: read.len() }),
    }
}
