//! Quantities, measures and units: the unit registry, exact ratio and product
//! arithmetic, and reading quantity nodes out of a graph.

mod quantity;
pub mod units;

use std::fmt;

use rust_decimal::{Decimal, RoundingStrategy};
use thiserror::Error;

pub use quantity::{literal_decimal, read_quantity, MeasurementMeta, Quantity};
pub use units::{registry, Unit, UnitKind, UnitRegistry};

/// Significant digits kept when a ratio cannot be represented exactly.
pub const RATIO_DIGITS: u32 = 15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeasureError {
    #[error("unknown unit <{0}>")]
    UnknownUnit(String),
    #[error("{node}: no om:value")]
    MissingValue { node: String },
    #[error("{node}: {count} om:value links, expected 1")]
    AmbiguousValue { node: String, count: usize },
    #[error("{node}: no om:numerical_value")]
    MissingNumeric { node: String },
    #[error("{node}: value {lexical:?} is not numeric")]
    NonNumeric { node: String, lexical: String },
    #[error("{node}: {property} spellings disagree ({a} vs {b})")]
    SpellingConflict { node: String, property: &'static str, a: String, b: String },
    #[error("{node}: no unit of measure")]
    MissingUnit { node: String },
    #[error("division by zero: denominator {denominator} is 0 {unit}")]
    ZeroDenominator { denominator: String, unit: String },
    #[error("cannot {op} {left} by {right} into {result}")]
    UnitMismatch { op: &'static str, left: String, right: String, result: String },
    #[error("{0} is negative but counts cannot be")]
    NegativeCardinality(Decimal),
    #[error("arithmetic overflow")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    pub value: Decimal,
    pub unit: Unit,
}

impl Measure {
    pub fn new(value: Decimal, unit: Unit) -> Result<Self, MeasureError> {
        if unit.is_cardinality() && value.is_sign_negative() && !value.is_zero() {
            return Err(MeasureError::NegativeCardinality(value));
        }
        Ok(Measure { value: value.normalize(), unit })
    }

    pub fn zero(unit: Unit) -> Self {
        Measure { value: Decimal::ZERO, unit }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.value, self.unit)
    }
}

/// Rounds to [`RATIO_DIGITS`] significant digits, halves away from zero, and drops
/// trailing zeros.
pub fn round_ratio(value: Decimal) -> Decimal {
    value
        .round_sf_with_strategy(RATIO_DIGITS, RoundingStrategy::MidpointAwayFromZero)
        .unwrap_or(value)
        .normalize()
}

/// `n / d` expressed in `result_unit`.
///
/// Accepted combinations: a ratio unit whose parts are `n.unit` / `d.unit`; percent or
/// dimensionless when both units agree; and an average (`d` is a count and the result
/// keeps `n`'s unit, as for mean interruption length in hours).
pub fn divide(n: &Measure, d: &Measure, result_unit: &Unit) -> Result<Measure, MeasureError> {
    let ok = match &result_unit.kind {
        UnitKind::Ratio { numerator, denominator } => {
            *numerator == n.unit.id && *denominator == d.unit.id
        }
        UnitKind::Percent | UnitKind::Dimensionless => n.unit == d.unit,
        _ => d.unit.is_cardinality() && result_unit.id == n.unit.id,
    };
    if !ok {
        return Err(MeasureError::UnitMismatch {
            op: "divide",
            left: n.unit.symbol.into(),
            right: d.unit.symbol.into(),
            result: result_unit.symbol.into(),
        });
    }
    if d.value.is_zero() {
        return Err(MeasureError::ZeroDenominator {
            denominator: d.value.to_string(),
            unit: d.unit.symbol.into(),
        });
    }
    let ratio = round_ratio(n.value.checked_div(d.value).ok_or(MeasureError::Overflow)?);
    let value = match result_unit.kind {
        UnitKind::Percent => ratio.checked_mul(Decimal::ONE_HUNDRED).ok_or(MeasureError::Overflow)?,
        _ => ratio,
    };
    Measure::new(value, result_unit.clone())
}

/// `a × b` expressed in `result_unit`.
///
/// A count times a measure keeps the measure's unit; the dimensionless unit is an
/// identity; two counts multiply into a person count (household size × households).
pub fn multiply(a: &Measure, b: &Measure, result_unit: &Unit) -> Result<Measure, MeasureError> {
    let one = units::one();
    let ok = if a.unit.id == one {
        result_unit.id == b.unit.id
    } else if b.unit.id == one {
        result_unit.id == a.unit.id
    } else {
        match (a.unit.is_cardinality(), b.unit.is_cardinality()) {
            (true, false) => result_unit.id == b.unit.id,
            (false, true) => result_unit.id == a.unit.id,
            (true, true) => result_unit.id == units::population_cardinality_unit(),
            (false, false) => false,
        }
    };
    if !ok {
        return Err(MeasureError::UnitMismatch {
            op: "multiply",
            left: a.unit.symbol.into(),
            right: b.unit.symbol.into(),
            result: result_unit.symbol.into(),
        });
    }
    let value = a.value.checked_mul(b.value).ok_or(MeasureError::Overflow)?;
    Measure::new(value, result_unit.clone())
}
