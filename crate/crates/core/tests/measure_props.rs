use gci_core::measures::units::{self, unit};
use gci_core::measures::{divide, multiply, read_quantity, round_ratio, Measure, MeasureError};
use gci_core::store::{parse_turtle, Iri, PrefixMap, Term};
use proptest::prelude::*;
use rust_decimal::Decimal;

fn value() -> impl Strategy<Value = Decimal> {
    (-1_000_000_000_000i64..1_000_000_000_000, 0u32..6).prop_map(|(m, s)| Decimal::new(m, s))
}

fn nonzero() -> impl Strategy<Value = Decimal> {
    value().prop_filter("nonzero", |d| !d.is_zero())
}

fn kwh(v: Decimal) -> Measure {
    Measure::new(v, unit(&units::kilowatt_hour())).unwrap()
}

fn significant_digits(d: Decimal) -> usize {
    d.normalize().mantissa().unsigned_abs().to_string().len()
}

proptest! {
    #[test]
    fn ratio_rounding_keeps_fifteen_digits(n in value(), d in nonzero()) {
        let exact = n / d;
        let r = round_ratio(exact);
        prop_assert!(significant_digits(r) <= 15);
        prop_assert_eq!(round_ratio(r), r);
        // half a unit in the 15th place, relative to the value
        let bound = exact.abs() * Decimal::new(5, 15);
        prop_assert!((r - exact).abs() <= bound, "{} vs {}", r, exact);
    }

    #[test]
    fn percent_is_hundred_times_dimensionless(n in value(), d in nonzero()) {
        let percent = divide(&kwh(n), &kwh(d), &unit(&units::percent())).unwrap();
        let one = divide(&kwh(n), &kwh(d), &unit(&units::one())).unwrap();
        prop_assert_eq!(percent.value, (one.value * Decimal::ONE_HUNDRED).normalize());
    }

    #[test]
    fn division_by_zero_is_an_error(n in value()) {
        let zero = Measure::new(Decimal::ZERO, unit(&units::population_cardinality_unit())).unwrap();
        let err = divide(&kwh(n), &zero, &unit(&units::kwh_per_pc())).unwrap_err();
        prop_assert!(matches!(err, MeasureError::ZeroDenominator { .. }), "unexpected {:?}", err);
    }

    #[test]
    fn units_must_line_up(n in value(), d in nonzero()) {
        let area = Measure::new(d, unit(&units::square_metre())).unwrap();
        prop_assert!(divide(&kwh(n), &area, &unit(&units::kwh_per_pc())).is_err());
        prop_assert!(divide(&kwh(n), &area, &unit(&units::percent())).is_err());
        prop_assert!(divide(&kwh(n), &area, &unit(&units::kwh_per_square_metre())).is_ok());
        prop_assert!(multiply(&kwh(n), &area, &unit(&units::kilowatt_hour())).is_err());
    }

    #[test]
    fn counts_cannot_be_negative(v in nonzero()) {
        let people = unit(&units::population_cardinality_unit());
        prop_assert_eq!(Measure::new(v, people).is_ok(), v > Decimal::ZERO);
    }

    #[test]
    fn count_times_measure_is_exact(k in 0i64..1_000_000, v in value()) {
        let count = Measure::new(Decimal::from(k), unit(&units::population_cardinality_unit())).unwrap();
        let product = multiply(&count, &kwh(v), &unit(&units::kilowatt_hour())).unwrap();
        prop_assert_eq!(product.value, (Decimal::from(k) * v).normalize());
    }

    #[test]
    fn quantity_reads_back_its_value(v in value(), unit_on_quantity in any::<bool>()) {
        let (q_unit, m_unit) = if unit_on_quantity { ("om:unit_of_measure om:kilowatt_hour ;", "") } else { ("", "; om:unit_of_measure om:kilowatt_hour") };
        let text = format!("@prefix : <http://example.org/q/> .\n:q {q_unit} om:value :m .\n:m om:numerical_value \"{v}\"^^xsd:decimal {m_unit} .");
        let g = parse_turtle(&text, &PrefixMap::default()).unwrap();
        let q = read_quantity(&g, &Term::Iri(Iri::new("http://example.org/q/q").unwrap())).unwrap();
        prop_assert_eq!(q.value.value, v.normalize());
        prop_assert_eq!(q.value.unit.id, units::kilowatt_hour());
    }
}
