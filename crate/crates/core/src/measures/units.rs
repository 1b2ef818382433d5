use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::store::vocab::{gci, om};
use crate::store::Iri;

use super::MeasureError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitKind {
    Base,
    Ratio { numerator: Iri, denominator: Iri },
    Percent,
    Cardinality,
    Dimensionless,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    pub id: Iri,
    pub symbol: &'static str,
    pub kind: UnitKind,
}

impl Unit {
    pub fn is_cardinality(&self) -> bool {
        self.kind == UnitKind::Cardinality
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol)
    }
}

pub fn kilowatt_hour() -> Iri {
    om::iri("kilowatt_hour")
}
pub fn square_metre() -> Iri {
    om::iri("square_metre")
}
pub fn hour() -> Iri {
    om::iri("hour")
}
pub fn percent() -> Iri {
    om::iri("percent")
}
pub fn one() -> Iri {
    om::iri("one")
}
pub fn population_cardinality_unit() -> Iri {
    gci::iri("population_cardinality_unit")
}
pub fn interruption() -> Iri {
    gci::iri("interruption")
}
pub fn kwh_per_pc() -> Iri {
    gci::iri("kwh_per_pc")
}
pub fn kwh_per_square_metre() -> Iri {
    gci::iri("kwh_per_square_metre")
}
pub fn interruption_per_year() -> Iri {
    gci::iri("interruption_per_year")
}

/// The closed set of units the engine knows. Looking up anything else is an error.
#[derive(Debug)]
pub struct UnitRegistry {
    units: BTreeMap<Iri, Unit>,
}

impl UnitRegistry {
    fn builtin() -> Self {
        let ratio = |n: Iri, d: Iri| UnitKind::Ratio { numerator: n, denominator: d };
        let units = [
            (kilowatt_hour(), "kWh", UnitKind::Base),
            (square_metre(), "m2", UnitKind::Base),
            (hour(), "h", UnitKind::Base),
            (percent(), "%", UnitKind::Percent),
            (one(), "1", UnitKind::Dimensionless),
            (population_cardinality_unit(), "persons", UnitKind::Cardinality),
            (interruption(), "interruptions", UnitKind::Cardinality),
            (kwh_per_pc(), "kWh/capita", ratio(kilowatt_hour(), population_cardinality_unit())),
            (kwh_per_square_metre(), "kWh/m2", ratio(kilowatt_hour(), square_metre())),
            (interruption_per_year(), "interruptions/customer", ratio(interruption(), population_cardinality_unit())),
        ]
        .into_iter()
        .map(|(id, symbol, kind)| (id.clone(), Unit { id, symbol, kind }))
        .collect();
        UnitRegistry { units }
    }

    pub fn get(&self, id: &Iri) -> Result<&Unit, MeasureError> {
        self.units.get(id).ok_or_else(|| MeasureError::UnknownUnit(id.as_str().to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Unit> {
        self.units.values()
    }
}

pub fn registry() -> &'static UnitRegistry {
    static REGISTRY: OnceLock<UnitRegistry> = OnceLock::new();
    REGISTRY.get_or_init(UnitRegistry::builtin)
}

/// Shorthand for a registered unit; panics only for the constants above.
pub fn unit(id: &Iri) -> Unit {
    registry().get(id).expect("built-in unit").clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn required_units_are_registered() {
        for id in [
            kilowatt_hour(),
            square_metre(),
            hour(),
            percent(),
            population_cardinality_unit(),
            interruption(),
            kwh_per_pc(),
            kwh_per_square_metre(),
            interruption_per_year(),
        ] {
            assert!(registry().get(&id).is_ok(), "{id}");
        }
    }

    #[test]
    fn unknown_unit_is_an_error() {
        let err = registry().get(&om::iri("megawatt_hour")).unwrap_err();
        assert!(matches!(err, MeasureError::UnknownUnit(_)));
    }

    #[test]
    fn ratio_units_record_their_parts() {
        assert_eq!(
            unit(&kwh_per_pc()).kind,
            UnitKind::Ratio { numerator: kilowatt_hour(), denominator: population_cardinality_unit() }
        );
    }
}
