use std::collections::{BTreeMap, BTreeSet};

use rust_decimal::Decimal;

use crate::measures::{divide, literal_decimal, read_quantity, Measure, MeasureError};
use crate::ontology::{is_instance, ClassExpression, Schema, Severity, Violation};
use crate::store::vocab::{gci, gcise, ot};
use crate::store::{Graph, Iri, Term};

use super::defs::{builtin_definitions, city_class, AggregateExpr, IndicatorDef, PopulationSpec};
use super::eval::{city_population_size, Evaluator, MissingPolicy, TraceEntry};
use super::IndicatorError;

/// Largest relative gap tolerated between an asserted indicator value and the
/// recomputed one.
pub const ASSERTED_TOLERANCE: Decimal = Decimal::from_parts(5, 0, 0, false, 3);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorResult {
    pub indicator: &'static str,
    pub iri: Iri,
    pub city: Iri,
    pub value: Measure,
    pub numerator_value: Measure,
    pub denominator_value: Measure,
    /// One entry per numerator member.
    pub trace: Vec<TraceEntry>,
    pub denominator_trace: Vec<TraceEntry>,
    pub warnings: Vec<Violation>,
}

/// Derives `def` for `city` and attaches the consistency findings that concern it.
pub fn derive_indicator(
    g: &Graph,
    s: &Schema,
    def: &IndicatorDef,
    city: &Iri,
    policy: MissingPolicy,
) -> Result<IndicatorResult, IndicatorError> {
    let mut result = evaluate(g, s, def, city, policy)?;
    let findings = check_internal_consistency(g, s, city);
    attach(&mut result, def, &findings);
    Ok(result)
}

/// Derives several indicators concurrently, one thread each, in the order given.
pub fn derive_all<'d>(
    g: &Graph,
    s: &Schema,
    defs: &[&'d IndicatorDef],
    city: &Iri,
    policy: MissingPolicy,
) -> Vec<(&'d IndicatorDef, Result<IndicatorResult, IndicatorError>)> {
    let (mut results, findings) = std::thread::scope(|scope| {
        let handles: Vec<_> =
            defs.iter().map(|def| scope.spawn(move || evaluate(g, s, def, city, policy))).collect();
        let findings = scope.spawn(|| check_internal_consistency(g, s, city));
        let results: Vec<_> = handles.into_iter().map(|h| h.join().expect("derivation thread panicked")).collect();
        (results, findings.join().expect("consistency thread panicked"))
    });
    for (def, result) in defs.iter().zip(results.iter_mut()) {
        if let Ok(r) = result {
            attach(r, def, &findings);
        }
    }
    defs.iter().copied().zip(results).collect()
}

fn attach(result: &mut IndicatorResult, def: &IndicatorDef, findings: &[Violation]) {
    let uses_population = [&def.numerator, &def.denominator].iter().any(|e| mentions_population_size(e));
    let population_class = gci::iri("City_Population_Size");
    result.warnings.extend(
        findings.iter().filter(|v| v.class == def.iri || (uses_population && v.class == population_class)).cloned(),
    );
    result.warnings.sort();
    result.warnings.dedup();
}

fn mentions_population_size(e: &AggregateExpr) -> bool {
    match e {
        AggregateExpr::CityPopulationSize => true,
        AggregateExpr::Product { term1, term2, .. } => {
            mentions_population_size(term1) || mentions_population_size(term2)
        }
        _ => false,
    }
}

/// Numerator, denominator and their ratio, without consistency findings.
pub fn evaluate(
    g: &Graph,
    s: &Schema,
    def: &IndicatorDef,
    city: &Iri,
    policy: MissingPolicy,
) -> Result<IndicatorResult, IndicatorError> {
    if !is_instance(g, s, &Term::Iri(city.clone()), &ClassExpression::Named(city_class())) {
        return Err(IndicatorError::NotACity(g.prefixes().display(city)));
    }
    let ev = Evaluator::new(g, s).in_city(city).with_policy(policy);
    let numerator = ev.eval(&def.numerator)?;
    let denominator = ev.eval(&def.denominator)?;
    let value = divide(&numerator.measure, &denominator.measure, &def.unit).map_err(|e| match e {
        MeasureError::ZeroDenominator { .. } => IndicatorError::ZeroDenominator {
            indicator: def.id.to_string(),
            denominator: denominator.measure.to_string(),
        },
        source => IndicatorError::Measure { context: def.id.to_string(), source },
    })?;
    let mut warnings = numerator.warnings;
    warnings.extend(denominator.warnings);
    Ok(IndicatorResult {
        indicator: def.id,
        iri: def.iri.clone(),
        city: city.clone(),
        value,
        numerator_value: numerator.measure,
        denominator_value: denominator.measure,
        trace: numerator.trace,
        denominator_trace: denominator.trace,
        warnings,
    })
}

fn ci(instance: Term, class: Iri, restriction: impl Into<String>, observed: impl Into<String>) -> Violation {
    Violation { severity: Severity::CI, instance, class, restriction: restriction.into(), observed: observed.into() }
}

/// Cross-checks between data items for one city:
/// total consumption below residential consumption, asserted indicator values far from
/// the recomputed ones, consumers with several accounts at one address, asserted
/// population disagreeing with the resident count, and interruptions listing more
/// impacted accounts than their count.
pub fn check_internal_consistency(g: &Graph, s: &Schema, city: &Iri) -> Vec<Violation> {
    let defs = builtin_definitions();
    let city_term = Term::Iri(city.clone());
    let mut out = Vec::new();
    let recomputed: BTreeMap<&str, IndicatorResult> = defs
        .values()
        .filter_map(|d| evaluate(g, s, d, city, MissingPolicy::Strict).ok().map(|r| (d.id, r)))
        .collect();

    let ev = Evaluator::new(g, s).in_city(city);
    if let (Ok(total), Ok(residential)) = (ev.eval(&defs["7.5"].numerator), ev.eval(&defs["7.1"].numerator)) {
        if total.measure.value < residential.measure.value {
            out.push(ci(
                city_term.clone(),
                defs["7.5"].iri.clone(),
                "7.5 consumption covers 7.1 residential consumption",
                format!("total {} < residential {}", total.measure, residential.measure),
            ));
        }
    }

    for def in defs.values() {
        let Some(r) = recomputed.get(def.id) else { continue };
        for node in asserted_instances(g, s, def, city) {
            let Ok(q) = read_quantity(g, &node) else { continue };
            let asserted = q.value.value;
            let gap = if asserted.is_zero() {
                if r.value.value.is_zero() { Decimal::ZERO } else { Decimal::ONE }
            } else {
                ((asserted - r.value.value) / asserted).abs()
            };
            if gap > ASSERTED_TOLERANCE {
                let percent = (gap * Decimal::ONE_HUNDRED).round_dp(1);
                out.push(ci(
                    node.clone(),
                    def.iri.clone(),
                    format!("asserted {} within 0.5% of recomputed value", def.id),
                    format!("asserted {}, recomputed {} (gap {percent}%)", q.value.value, r.value.value),
                ));
            }
        }
    }

    out.extend(multiple_accounts(g, s, city));

    if let Ok(size) = city_population_size(g, s, city) {
        if size.disagrees() {
            out.push(ci(
                size.asserted.clone().unwrap_or(city_term.clone()),
                gci::iri("City_Population_Size"),
                "asserted population equals resident count",
                format!("asserted {}, {} residents", size.measure.value, size.residents),
            ));
        }
    }

    let interruptions =
        Evaluator::new(g, s).in_city(city).population(&PopulationSpec::of(gcise::iri("ElectricalServiceInterruption")));
    for x in interruptions {
        if let Ok(r) = read_interruption(g, &x) {
            if (r.num_accounts as usize) < r.impacted_accounts.len() {
                out.push(ci(
                    x.clone(),
                    gcise::iri("ElectricalServiceInterruption"),
                    "num_accounts covers impactAccount",
                    format!("{} accounts counted, {} listed", r.num_accounts, r.impacted_accounts.len()),
                ));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Asserted instances of an indicator class for the city.
fn asserted_instances(g: &Graph, s: &Schema, def: &IndicatorDef, city: &Iri) -> BTreeSet<Term> {
    Evaluator::new(g, s).in_city(city).population(&PopulationSpec::of(def.iri.clone()))
}

fn multiple_accounts(g: &Graph, s: &Schema, city: &Iri) -> Vec<Violation> {
    let accounts = Evaluator::new(g, s).in_city(city).population(&PopulationSpec::of(gcise::iri("ServiceAccount")));
    let mut by_holder: BTreeMap<(Term, Term), Vec<Term>> = BTreeMap::new();
    for account in accounts {
        for holder in g.objects(&account, &gcise::iri("owned_by")) {
            for address in g.objects(&account, &gcise::iri("hasServiceAddress")) {
                by_holder.entry((holder.clone(), address.clone())).or_default().push(account.clone());
            }
        }
    }
    by_holder
        .into_iter()
        .filter(|(_, accts)| accts.len() > 1)
        .map(|((holder, address), accts)| {
            let shown: Vec<String> = accts.iter().map(|a| g.display(a)).collect();
            ci(
                holder,
                gcise::iri("ServiceAccount"),
                "one account per consumer and address",
                format!("{} accounts at {}: {}", accts.len(), g.display(&address), shown.join(", ")),
            )
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServiceInterruptionRecord {
    pub iri: Term,
    /// Absent means not weather-caused.
    pub caused_by_weather: bool,
    pub duration_hours: Decimal,
    pub num_accounts: u64,
    pub impacted_accounts: Vec<Term>,
    pub provider: Option<Term>,
}

pub fn read_interruption(g: &Graph, x: &Term) -> Result<ServiceInterruptionRecord, IndicatorError> {
    let bad = |reason: String| IndicatorError::Interruption { node: g.display(x), reason };
    let single = |p: Iri| -> Result<&Term, IndicatorError> {
        let vals: Vec<&Term> = g.objects(x, &p).collect();
        match vals.as_slice() {
            [v] => Ok(v),
            _ => Err(bad(format!("{} values for {}", vals.len(), g.prefixes().display(&p)))),
        }
    };
    let number = |p: Iri| -> Result<Decimal, IndicatorError> {
        let t = single(p.clone())?;
        t.as_literal()
            .and_then(literal_decimal)
            .ok_or_else(|| bad(format!("{} is not a number", g.prefixes().display(&p))))
    };
    let caused_by_weather = match g.objects(x, &gcise::iri("causedByWeather")).next() {
        None => false,
        Some(t) => t.as_literal().and_then(|l| l.as_bool()).ok_or_else(|| bad("causedByWeather is not a boolean".into()))?,
    };
    let duration_hours = number(ot::iri("hasDurationDescription"))?;
    let count = number(gcise::iri("num_accounts"))?;
    let num_accounts = u64::try_from(count)
        .ok()
        .filter(|_| count.fract().is_zero())
        .ok_or_else(|| bad(format!("num_accounts {count} is not a count")))?;
    Ok(ServiceInterruptionRecord {
        iri: x.clone(),
        caused_by_weather,
        duration_hours,
        num_accounts,
        impacted_accounts: g.objects(x, &gcise::iri("impactAccount")).cloned().collect(),
        provider: g.objects(x, &gcise::iri("impactProvider")).next().cloned(),
    })
}
