//! Random city data and a brute-force evaluator that reads raw triples only.
#![allow(dead_code)]

pub mod graphs;

use std::fmt::Write;

use gci_core::store::{parse_turtle, Graph, PrefixMap, Term};
use proptest::prelude::*;
use rust_decimal::Decimal;

pub const NS: &str = "http://example.org/r/";
pub const GCI: &str = "http://ontology.eil.utoronto.ca/GCI/Foundation/GCI-Foundation.owl";
pub const GCIBO: &str = "http://ontology.eil.utoronto.ca/GCI/BuildingOccupancy/GCI-BuildingOccupancy.owl";
pub const GCISE: &str = "http://ontology.eil.utoronto.ca/GCI/Energy/GCI-Service.owl";
pub const GCIS: &str = "http://ontology.eil.utoronto.ca/GCI/Shelters/GCI-Shelters.owl";
pub const IC: &str = "http://ontology.eil.utoronto.ca/icontact.owl";
pub const OM: &str = "http://www.wurvoc.org/vocabularies/om-1.8";
pub const OT: &str = "http://www.w3.org/2006/time";
pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

pub const BUILDING_KINDS: [&str; 5] =
    ["ResidentialBuilding", "CommercialBuilding", "IndustrialBuilding", "PublicBuilding", "Building"];
pub const RENEWABLE: [&str; 7] =
    ["Biomass", "Geothermal_Energy", "Hydro_Energy", "Solar_Energy", "Tide", "Wave", "Wind_Energy"];
pub const NON_RENEWABLE: [&str; 4] = ["Oil", "Natural_Gas", "Coal", "Nuclear"];

/// How a member is tied to a city.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// `gci:located_in :c`
    Direct,
    /// through an address node with `ic:hasCity :c`
    ViaAddress,
    /// located in the other city `:d`
    Elsewhere,
    /// no location at all
    Nowhere,
}

#[derive(Debug, Clone)]
pub struct Building {
    pub kind: &'static str,
    pub scope: Scope,
    pub consumption: Decimal,
    pub area: Decimal,
    /// Values sit on quantity nodes rather than directly on the building.
    pub quantity_nodes: bool,
}

#[derive(Debug, Clone)]
pub struct Source {
    pub kind: &'static str,
    pub scope: Scope,
    pub production: Decimal,
    pub quantity_nodes: bool,
}

#[derive(Debug, Clone)]
pub struct Interruption {
    /// `None` leaves `causedByWeather` unstated.
    pub weather: Option<bool>,
    pub accounts: u32,
    pub hours: Decimal,
    pub scope: Scope,
}

#[derive(Debug, Clone)]
pub struct City {
    pub buildings: Vec<Building>,
    pub sources: Vec<Source>,
    pub accounts: Vec<Scope>,
    pub interruptions: Vec<Interruption>,
    /// One entry per household: electrical consumer or not, and its scope.
    pub households: Vec<(bool, Scope)>,
    pub avg_household_size: Decimal,
    pub population: Option<u64>,
    pub residents: usize,
}

fn scope() -> impl Strategy<Value = Scope> {
    prop_oneof![4 => Just(Scope::Direct), 4 => Just(Scope::ViaAddress), 1 => Just(Scope::Elsewhere), 1 => Just(Scope::Nowhere)]
}

/// Non-negative decimal with up to `dp` places and magnitude below `max`.
pub fn decimal(max: i64, dp: u32) -> impl Strategy<Value = Decimal> {
    (0..max * 10i64.pow(dp), 0..=dp).prop_map(move |(n, scale)| Decimal::new(n / 10i64.pow(dp - scale), scale))
}

fn building() -> impl Strategy<Value = Building> {
    (prop::sample::select(BUILDING_KINDS.to_vec()), scope(), decimal(1_000_000, 2), decimal(10_000, 1), any::<bool>())
        .prop_map(|(kind, scope, consumption, area, quantity_nodes)| Building { kind, scope, consumption, area, quantity_nodes })
}

fn source() -> impl Strategy<Value = Source> {
    let kinds: Vec<&'static str> = RENEWABLE.iter().chain(NON_RENEWABLE.iter()).copied().collect();
    (prop::sample::select(kinds), scope(), decimal(1_000_000, 2), any::<bool>())
        .prop_map(|(kind, scope, production, quantity_nodes)| Source { kind, scope, production, quantity_nodes })
}

fn interruption() -> impl Strategy<Value = Interruption> {
    (prop::option::weighted(0.9, any::<bool>()), 0u32..500, decimal(48, 2), scope())
        .prop_map(|(weather, accounts, hours, scope)| Interruption { weather, accounts, hours, scope })
}

/// A random city `:c`, with a second city `:d` for scoping noise. At most 50 of each
/// kind of member.
pub fn city() -> impl Strategy<Value = City> {
    (
        prop::collection::vec(building(), 0..=50),
        prop::collection::vec(source(), 0..=20),
        prop::collection::vec(scope(), 0..=50),
        prop::collection::vec(interruption(), 0..=50),
        prop::collection::vec((any::<bool>(), scope()), 0..=30),
        decimal(6, 1),
        prop::option::of(1u64..10_000_000),
        0usize..20,
    )
        .prop_map(|(buildings, sources, accounts, interruptions, households, avg, population, residents)| City {
            buildings,
            sources,
            accounts,
            interruptions,
            households,
            avg_household_size: avg,
            population,
            residents,
        })
}

fn place(out: &mut String, node: &str, scope: Scope, address_property: &str) {
    match scope {
        Scope::Direct => writeln!(out, "{node} gci:located_in :c .").unwrap(),
        Scope::ViaAddress => {
            writeln!(out, "{node} {address_property} {node}_addr .\n{node}_addr a ic:Address ; ic:hasCity :c .").unwrap()
        }
        Scope::Elsewhere => writeln!(out, "{node} gci:located_in :d .").unwrap(),
        Scope::Nowhere => {}
    }
}

fn value(out: &mut String, node: &str, property: &str, v: Decimal, unit: &str, via_node: bool) {
    if via_node {
        writeln!(
            out,
            "{node} {property} {node}_{tag} .\n{node}_{tag} om:value {node}_{tag}_m .\n\
             {node}_{tag}_m om:numerical_value {v} ; om:unit_of_measure {unit} .",
            tag = property.rsplit(':').next().unwrap()
        )
        .unwrap();
    } else {
        writeln!(out, "{node} {property} {v} .").unwrap();
    }
}

impl City {
    pub fn turtle(&self) -> String {
        let mut out = String::from("@prefix : <http://example.org/r/> .\n:c a sch:City .\n:d a sch:City .\n");
        for (i, b) in self.buildings.iter().enumerate() {
            let node = format!(":b{i}");
            writeln!(out, "{node} a gcibo:{} .", b.kind).unwrap();
            place(&mut out, &node, b.scope, "ic:hasAddress");
            value(&mut out, &node, "gcibo:hasElectricalConsumption", b.consumption, "om:kilowatt_hour", b.quantity_nodes);
            value(&mut out, &node, "gcibo:hasFloorArea", b.area, "om:square_metre", b.quantity_nodes);
        }
        for (i, s) in self.sources.iter().enumerate() {
            let node = format!(":s{i}");
            writeln!(out, "{node} a gcise:{} .", s.kind).unwrap();
            place(&mut out, &node, s.scope, "ic:hasAddress");
            value(&mut out, &node, "gcise:quantityOfProduction", s.production, "om:kilowatt_hour", s.quantity_nodes);
        }
        for (i, scope) in self.accounts.iter().enumerate() {
            let node = format!(":a{i}");
            writeln!(out, "{node} a gcise:ElectricalServiceAccount .").unwrap();
            place(&mut out, &node, *scope, "gcise:hasServiceAddress");
        }
        for (i, x) in self.interruptions.iter().enumerate() {
            let node = format!(":i{i}");
            writeln!(
                out,
                "{node} a gcise:ElectricalServiceInterruption ; gcise:num_accounts {} ; ot:hasDurationDescription {} .",
                x.accounts, x.hours
            )
            .unwrap();
            if let Some(w) = x.weather {
                writeln!(out, "{node} gcise:causedByWeather {w} .").unwrap();
            }
            place(&mut out, &node, x.scope, "ic:hasAddress");
        }
        for (i, (electrical, scope)) in self.households.iter().enumerate() {
            let node = format!(":h{i}");
            let kind = if *electrical { "gcise:ResidentialElectricalConsumerHousehold" } else { "gcis:Household" };
            writeln!(out, "{node} a {kind} .").unwrap();
            place(&mut out, &node, *scope, "ic:hasAddress");
        }
        writeln!(
            out,
            ":avg a gcis:Average_household_size ; gci:for_city :c ; om:value :avg_m .\n\
             :avg_m om:numerical_value {} ; om:unit_of_measure gci:population_cardinality_unit .",
            self.avg_household_size
        )
        .unwrap();
        if let Some(p) = self.population {
            writeln!(
                out,
                ":pop a gci:City_Population ; gci:located_in :c .\n\
                 :pop_size a gci:City_Population_Size ; gci:cardinality_of :pop ; om:value :pop_m .\n\
                 :pop_m om:numerical_value {p} ; om:unit_of_measure gci:population_cardinality_unit ."
            )
            .unwrap();
        }
        for i in 0..self.residents {
            writeln!(out, ":r{i} a gci:Resident ; gci:located_in :c .").unwrap();
        }
        out
    }

    pub fn graph(&self) -> Graph {
        parse_turtle(&self.turtle(), &PrefixMap::default()).expect("generated data parses")
    }

    /// Every consumption value multiplied by `k`.
    pub fn scaled_consumption(&self, k: Decimal) -> City {
        let mut c = self.clone();
        for b in &mut c.buildings {
            b.consumption *= k;
        }
        c
    }
}

pub fn city_iri() -> gci_core::store::Iri {
    gci_core::store::Iri::new(format!("{NS}c")).unwrap()
}

/// Evaluation straight off the triple list, with the class lists spelled out.
pub mod oracle {
    use super::*;

    fn iri(t: &Term) -> Option<&str> {
        match t {
            Term::Iri(i) => Some(i.as_str()),
            _ => None,
        }
    }

    fn objects<'g>(g: &'g Graph, s: &Term, p: &str) -> Vec<&'g Term> {
        g.triples().iter().filter(|t| &t.subject == s && iri(&t.predicate) == Some(p)).map(|t| &t.object).collect()
    }

    fn in_city(g: &Graph, x: &Term) -> bool {
        let c = format!("{NS}c");
        let is_c = |t: &&Term| iri(t) == Some(c.as_str());
        objects(g, x, &format!("{GCI}located_in")).iter().any(is_c)
            || objects(g, x, &format!("{GCI}for_city")).iter().any(is_c)
            || objects(g, x, &format!("{IC}hasCity")).iter().any(is_c)
            || [format!("{IC}hasAddress"), format!("{GCISE}hasServiceAddress")]
                .iter()
                .flat_map(|p| objects(g, x, p))
                .any(|a| objects(g, a, &format!("{IC}hasCity")).iter().any(is_c))
    }

    /// Members typed with any of `classes` (full IRIs), in `:c`, passing the filter.
    pub fn members(g: &Graph, classes: &[String], filter: Option<(&str, &str)>) -> Vec<Term> {
        let mut out: Vec<Term> = g
            .triples()
            .iter()
            .filter(|t| iri(&t.predicate) == Some(RDF_TYPE) && iri(&t.object).is_some_and(|o| classes.iter().any(|c| c == o)))
            .map(|t| t.subject.clone())
            .filter(|m| in_city(g, m))
            .filter(|m| {
                filter.is_none_or(|(p, lexical)| {
                    objects(g, m, p).iter().any(|o| o.as_literal().is_some_and(|l| l.lexical() == lexical))
                })
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn number(t: &Term) -> Decimal {
        t.as_literal().unwrap().lexical().parse().unwrap()
    }

    pub fn value(g: &Graph, m: &Term, p: &str) -> Decimal {
        let v = objects(g, m, p);
        assert_eq!(v.len(), 1, "{m} {p}");
        match v[0] {
            Term::Literal(_) => number(v[0]),
            node => {
                let measure = objects(g, node, &format!("{OM}value"))[0];
                number(objects(g, measure, &format!("{OM}numerical_value"))[0])
            }
        }
    }

    pub fn sum(g: &Graph, classes: &[String], p: &str, filter: Option<(&str, &str)>) -> Decimal {
        let mut total = Decimal::ZERO;
        for m in members(g, classes, filter) {
            total += value(g, &m, p);
        }
        total
    }

    pub fn count(g: &Graph, classes: &[String], filter: Option<(&str, &str)>) -> Decimal {
        Decimal::from(members(g, classes, filter).len())
    }

    pub fn classes(ns: &str, locals: &[&str]) -> Vec<String> {
        locals.iter().map(|l| format!("{ns}{l}")).collect()
    }

    fn quantity(g: &Graph, node: &Term) -> Decimal {
        let measure = objects(g, node, &format!("{OM}value"))[0];
        number(objects(g, measure, &format!("{OM}numerical_value"))[0])
    }

    /// Asserted population size when there is one, otherwise residents in `:c`.
    pub fn population(g: &Graph) -> Decimal {
        let asserted = members_anywhere(g, &format!("{GCI}City_Population_Size"))
            .into_iter()
            .find(|q| objects(g, q, &format!("{GCI}cardinality_of")).iter().any(|p| in_city(g, p)));
        match asserted {
            Some(q) => quantity(g, &q),
            None => count(g, &classes(GCI, &["Resident"]), None),
        }
    }

    fn members_anywhere(g: &Graph, class: &str) -> Vec<Term> {
        g.triples()
            .iter()
            .filter(|t| iri(&t.predicate) == Some(RDF_TYPE) && iri(&t.object) == Some(class))
            .map(|t| t.subject.clone())
            .collect()
    }

    /// Numerator and denominator of each indicator.
    pub fn parts(g: &Graph, id: &str) -> (Decimal, Decimal) {
        let consumption = format!("{GCIBO}hasElectricalConsumption");
        let production = format!("{GCISE}quantityOfProduction");
        let interruptions = classes(GCISE, &["ElectricalServiceInterruption"]);
        let weather = format!("{GCISE}causedByWeather");
        let not_weather = Some((weather.as_str(), "false"));
        let all_sources: Vec<&str> = RENEWABLE.iter().chain(NON_RENEWABLE.iter()).copied().collect();
        match id {
            "7.1" => (sum(g, &classes(GCIBO, &["ResidentialBuilding"]), &consumption, None), population(g)),
            "7.2" => {
                let households = count(g, &classes(GCISE, &["ResidentialElectricalConsumerHousehold"]), None);
                let avg = quantity(g, &Term::Iri(gci_core::store::Iri::new(format!("{NS}avg")).unwrap()));
                (avg * households, population(g))
            }
            "7.3" => (
                sum(g, &classes(GCIBO, &["PublicBuilding"]), &consumption, None),
                sum(g, &classes(GCIBO, &["PublicBuilding"]), &format!("{GCIBO}hasFloorArea"), None),
            ),
            "7.4" => (
                sum(g, &classes(GCISE, &RENEWABLE), &production, None),
                sum(g, &classes(GCISE, &all_sources), &production, None),
            ),
            "7.5" => (sum(g, &classes(GCIBO, &BUILDING_KINDS), &consumption, None), population(g)),
            "7.6" => (
                sum(g, &interruptions, &format!("{GCISE}num_accounts"), not_weather),
                count(g, &classes(GCISE, &["ElectricalServiceAccount"]), None),
            ),
            "7.7" => (
                sum(g, &interruptions, &format!("{OT}hasDurationDescription"), not_weather),
                count(g, &interruptions, not_weather),
            ),
            _ => unreachable!(),
        }
    }
}
