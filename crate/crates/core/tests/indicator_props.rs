mod common;

use common::{city, city_iri, oracle, Building, Scope, NS};
use gci_core::indicators::{
    builtin_definitions, evaluate, Evaluator, IndicatorError, IndicatorResult, MissingPolicy,
};
use gci_core::ontology::builtin_schema;
use gci_core::store::{Graph, Term};
use proptest::prelude::*;
use rust_decimal::Decimal;

const IDS: [&str; 7] = ["7.1", "7.2", "7.3", "7.4", "7.5", "7.6", "7.7"];

fn derive(g: &Graph, id: &str) -> Result<IndicatorResult, IndicatorError> {
    evaluate(g, builtin_schema(), &builtin_definitions()[id], &city_iri(), MissingPolicy::Strict)
}

fn parts(g: &Graph, id: &str) -> (Result<Decimal, IndicatorError>, Result<Decimal, IndicatorError>) {
    let def = &builtin_definitions()[id];
    let city = city_iri();
    let ev = Evaluator::new(g, builtin_schema()).in_city(&city);
    (ev.eval(&def.numerator).map(|e| e.measure.value), ev.eval(&def.denominator).map(|e| e.measure.value))
}

fn weather_caused(g: &Graph, member: &Term) -> bool {
    let p = gci_core::store::vocab::gcise::iri("causedByWeather");
    g.objects(member, &p).any(|o| o.as_literal().and_then(|l| l.as_bool()) == Some(true))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluator_matches_brute_force(c in city()) {
        let g = c.graph();
        for id in IDS {
            let (num, den) = parts(&g, id);
            let (want_num, want_den) = oracle::parts(&g, id);
            prop_assert_eq!(num.unwrap(), want_num.normalize(), "numerator {}", id);
            match den {
                Ok(d) => prop_assert_eq!(d, want_den.normalize(), "denominator {}", id),
                // only the city population can be missing altogether
                Err(IndicatorError::NoPopulation { .. }) => prop_assert!(want_den.is_zero()),
                Err(e) => return Err(TestCaseError::fail(format!("{id}: {e}"))),
            }
        }
    }

    #[test]
    fn trace_sums_to_numerator(c in city()) {
        let g = c.graph();
        for id in IDS {
            if let Ok(r) = derive(&g, id) {
                let total: Decimal = r.trace.iter().map(|t| t.contribution).sum();
                prop_assert_eq!(total.normalize(), r.numerator_value.value, "{}", id);
            }
        }
    }

    #[test]
    fn weather_caused_interruptions_never_count(c in city()) {
        let g = c.graph();
        for id in ["7.6", "7.7"] {
            let def = &builtin_definitions()[id];
            let city = city_iri();
            let ev = Evaluator::new(&g, builtin_schema()).in_city(&city);
            let trace = ev.eval(&def.numerator).unwrap().trace;
            prop_assert!(trace.iter().all(|t| !weather_caused(&g, &t.member)));
        }
        let mut stormy = c.clone();
        for x in &mut stormy.interruptions {
            x.weather = Some(true);
        }
        let (num, _) = parts(&stormy.graph(), "7.6");
        prop_assert!(num.unwrap().is_zero());
    }

    #[test]
    fn percent_is_exactly_hundred_times_ratio(c in city()) {
        let g = c.graph();
        for id in ["7.2", "7.4"] {
            let def = &builtin_definitions()[id];
            let percent = evaluate(&g, builtin_schema(), def, &city_iri(), MissingPolicy::Strict);
            let ratio = evaluate(&g, builtin_schema(), &def.as_ratio(), &city_iri(), MissingPolicy::Strict);
            match (percent, ratio) {
                (Ok(p), Ok(r)) => prop_assert_eq!(p.value.value, (r.value.value * Decimal::ONE_HUNDRED).normalize()),
                (Err(_), Err(_)) => {}
                (p, r) => return Err(TestCaseError::fail(format!("{id}: {p:?} vs {r:?}"))),
            }
        }
    }

    #[test]
    fn all_renewable_production_is_hundred_percent(c in city()) {
        let mut green = c.clone();
        green.sources.retain(|s| common::RENEWABLE.contains(&s.kind));
        let g = green.graph();
        if let Ok(r) = derive(&g, "7.4") {
            prop_assert_eq!(r.value.value, Decimal::ONE_HUNDRED);
        }
    }

    #[test]
    fn consumption_scales_linearly(c in city(), k in 1i64..1000) {
        let k = Decimal::from(k);
        let (g, scaled) = (c.graph(), c.scaled_consumption(k).graph());
        for id in ["7.1", "7.3", "7.5"] {
            let (a, b) = (parts(&g, id).0.unwrap(), parts(&scaled, id).0.unwrap());
            prop_assert_eq!((a * k).normalize(), b, "{}", id);
        }
        for id in ["7.2", "7.6", "7.7"] {
            prop_assert_eq!(derive(&g, id).map(|r| r.value), derive(&scaled, id).map(|r| r.value), "{}", id);
        }
    }

    #[test]
    fn adding_members_is_monotone(c in city(), extra in 1i64..1_000_000) {
        let before = parts(&c.graph(), "7.5").0.unwrap();
        let mut more = c.clone();
        more.buildings.push(Building {
            kind: "CommercialBuilding",
            scope: Scope::Direct,
            consumption: Decimal::from(extra),
            area: Decimal::ONE,
            quantity_nodes: false,
        });
        let after_graph = more.graph();
        prop_assert!(parts(&after_graph, "7.5").0.unwrap() > before);

        let accounts = parts(&c.graph(), "7.6").1.unwrap();
        let mut one_more = c.clone();
        one_more.accounts.push(Scope::Direct);
        prop_assert_eq!(parts(&one_more.graph(), "7.6").1.unwrap(), accounts + Decimal::ONE);
    }
}

#[test]
fn scoping_ignores_other_cities() {
    let text = format!(
        "@prefix : <{NS}> .\n:c a sch:City . :d a sch:City .\n\
         :b1 a gcibo:Building ; gci:located_in :c ; gcibo:hasElectricalConsumption 5 .\n\
         :b2 a gcibo:Building ; gci:located_in :d ; gcibo:hasElectricalConsumption 7 .\n\
         :b3 a gcibo:Building ; gcibo:hasElectricalConsumption 11 ."
    );
    let g = gci_core::store::parse_turtle(&text, &Default::default()).unwrap();
    assert_eq!(parts(&g, "7.5").0.unwrap(), Decimal::from(5));
}
