use std::collections::BTreeMap;

use crate::measures::units::{self, Unit};
use crate::ontology::{ClassExpression, Schema};
use crate::store::vocab::{gci, gcibo, gcis, gcise, iso37120};
use crate::store::{Iri, Literal, Term};

use super::IndicatorError;

/// A class-defined set of instances, optionally restricted to one city and to members
/// carrying given property values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PopulationSpec {
    pub defined_by: ClassExpression,
    pub located_in: Option<Iri>,
    pub filters: Vec<(Iri, Term)>,
}

impl PopulationSpec {
    pub fn of(class: Iri) -> Self {
        PopulationSpec { defined_by: ClassExpression::Named(class), located_in: None, filters: Vec::new() }
    }

    pub fn with_filter(mut self, property: Iri, value: impl Into<Term>) -> Self {
        self.filters.push((property, value.into()));
        self
    }

    pub fn in_city(mut self, city: Iri) -> Self {
        self.located_in = Some(city);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AggregateExpr {
    /// Sum of a variable over the members of a population.
    Sum { population: PopulationSpec, variable: Iri },
    /// Number of members, in persons.
    Cardinality { population: PopulationSpec },
    /// Product of two sub-results, expressed in `unit`. The trace of `term2` is scaled
    /// by the value of `term1`.
    Product { term1: Box<AggregateExpr>, term2: Box<AggregateExpr>, unit: Iri },
    /// The value of the single quantity of this kind recorded for the city.
    QuantityRef { kind: Iri },
    /// The city's population size: an asserted `gci:City_Population_Size` when present,
    /// otherwise the number of `gci:Resident` instances in the city.
    CityPopulationSize,
}

impl AggregateExpr {
    pub fn sum(population: PopulationSpec, variable: Iri) -> Self {
        AggregateExpr::Sum { population, variable }
    }

    pub fn count(population: PopulationSpec) -> Self {
        AggregateExpr::Cardinality { population }
    }

    /// Every population mentioned in the expression.
    pub fn populations(&self) -> Vec<&PopulationSpec> {
        match self {
            AggregateExpr::Sum { population, .. } | AggregateExpr::Cardinality { population } => vec![population],
            AggregateExpr::Product { term1, term2, .. } => {
                let mut out = term1.populations();
                out.extend(term2.populations());
                out
            }
            AggregateExpr::QuantityRef { .. } | AggregateExpr::CityPopulationSize => Vec::new(),
        }
    }
}

/// How a variable is read off a population member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableBinding {
    pub variable: Iri,
    /// Properties followed from the member. The last hop may land on a literal or on a
    /// quantity node, which is then read through its measure.
    pub property_path: Vec<Iri>,
    pub unit: Unit,
}

/// Unit each built-in variable is summed in.
fn variable_unit(variable: &Iri) -> Option<Iri> {
    let local = variable.as_str().strip_prefix(gcise::NS).or_else(|| variable.as_str().strip_prefix(gcibo::NS))?;
    Some(match local {
        "electricalConsumptionVar" | "electricalProductionVar" => units::kilowatt_hour(),
        "floorAreaVar" => units::square_metre(),
        "serviceInterruptionVar" => units::interruption(),
        "serviceDurationVar" => units::hour(),
        _ => return None,
    })
}

pub fn variable_binding(s: &Schema, variable: &Iri) -> Result<VariableBinding, IndicatorError> {
    let unknown = || IndicatorError::UnknownVariable(variable.as_str().to_string());
    let (_, path) = s.variable(variable).ok_or_else(unknown)?;
    let unit = variable_unit(variable).ok_or_else(unknown)?;
    Ok(VariableBinding { variable: variable.clone(), property_path: path.to_vec(), unit: units::unit(&unit) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Ratio,
    Percent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorDef {
    pub id: &'static str,
    pub iri: Iri,
    pub title: &'static str,
    pub numerator: AggregateExpr,
    pub denominator: AggregateExpr,
    pub unit: Unit,
    pub scale: Scale,
}

impl IndicatorDef {
    /// The same definition with a plain (dimensionless) ratio instead of a percentage.
    pub fn as_ratio(&self) -> IndicatorDef {
        IndicatorDef { scale: Scale::Ratio, unit: units::unit(&units::one()), ..self.clone() }
    }
}

/// Interruptions not caused by extreme weather; shared by 7.6 and 7.7.
pub fn non_weather_interruptions() -> PopulationSpec {
    PopulationSpec::of(gcise::iri("ElectricalServiceInterruption"))
        .with_filter(gcise::iri("causedByWeather"), Literal::boolean(false))
}

pub fn renewable_sources() -> ClassExpression {
    ClassExpression::union(
        ["Biomass", "Geothermal_Energy", "Hydro_Energy", "Solar_Energy", "Tide", "Wave", "Wind_Energy"]
            .map(gcise::iri),
    )
}

/// The seven energy indicators, keyed by id ("7.1" .. "7.7").
pub fn builtin_definitions() -> BTreeMap<&'static str, IndicatorDef> {
    let consumption = || gcise::iri("electricalConsumptionVar");
    let production = || gcise::iri("electricalProductionVar");
    let defs = [
        IndicatorDef {
            id: "7.1",
            iri: iso37120::iri("7.1"),
            title: "Total residential electrical energy use per capita",
            numerator: AggregateExpr::sum(PopulationSpec::of(gcibo::iri("ResidentialBuilding")), consumption()),
            denominator: AggregateExpr::CityPopulationSize,
            unit: units::unit(&units::kwh_per_pc()),
            scale: Scale::Ratio,
        },
        IndicatorDef {
            id: "7.2",
            iri: iso37120::iri("7.2"),
            title: "Percentage of city population with authorized electrical service",
            numerator: AggregateExpr::Product {
                term1: Box::new(AggregateExpr::QuantityRef { kind: gcis::iri("Average_household_size") }),
                term2: Box::new(AggregateExpr::count(PopulationSpec::of(gcise::iri(
                    "ResidentialElectricalConsumerHousehold",
                )))),
                unit: units::population_cardinality_unit(),
            },
            denominator: AggregateExpr::CityPopulationSize,
            unit: units::unit(&units::percent()),
            scale: Scale::Percent,
        },
        IndicatorDef {
            id: "7.3",
            iri: iso37120::iri("7.3"),
            title: "Energy consumption of public buildings per year",
            numerator: AggregateExpr::sum(PopulationSpec::of(gcibo::iri("PublicBuilding")), consumption()),
            denominator: AggregateExpr::sum(PopulationSpec::of(gcibo::iri("PublicBuilding")), gcibo::iri("floorAreaVar")),
            unit: units::unit(&units::kwh_per_square_metre()),
            scale: Scale::Ratio,
        },
        IndicatorDef {
            id: "7.4",
            iri: iso37120::iri("7.4"),
            title: "Percentage of total energy derived from renewable sources",
            numerator: AggregateExpr::sum(
                PopulationSpec { defined_by: renewable_sources(), located_in: None, filters: Vec::new() },
                production(),
            ),
            denominator: AggregateExpr::sum(
                PopulationSpec::of(gcise::iri("ElectricalPowerGenerationSource")),
                production(),
            ),
            unit: units::unit(&units::percent()),
            scale: Scale::Percent,
        },
        IndicatorDef {
            id: "7.5",
            iri: iso37120::iri("7.5"),
            title: "Total electrical energy use per capita",
            numerator: AggregateExpr::sum(PopulationSpec::of(gcibo::iri("Building")), consumption()),
            denominator: AggregateExpr::CityPopulationSize,
            unit: units::unit(&units::kwh_per_pc()),
            scale: Scale::Ratio,
        },
        IndicatorDef {
            id: "7.6",
            iri: iso37120::iri("7.6"),
            title: "Average number of electrical interruptions per customer per year",
            numerator: AggregateExpr::sum(non_weather_interruptions(), gcise::iri("serviceInterruptionVar")),
            denominator: AggregateExpr::count(PopulationSpec::of(gcise::iri("ElectricalServiceAccount"))),
            unit: units::unit(&units::interruption_per_year()),
            scale: Scale::Ratio,
        },
        IndicatorDef {
            id: "7.7",
            iri: iso37120::iri("7.7"),
            title: "Average length of electrical interruptions",
            numerator: AggregateExpr::sum(non_weather_interruptions(), gcise::iri("serviceDurationVar")),
            denominator: AggregateExpr::count(non_weather_interruptions()),
            unit: units::unit(&units::hour()),
            scale: Scale::Ratio,
        },
    ];
    defs.into_iter().map(|d| (d.id, d)).collect()
}

/// `gci:City`, the class every derivation target must belong to.
pub fn city_class() -> Iri {
    gci::iri("City")
}
