//! The GCI Service, Building Occupancy and Foundation schemas, and the class
//! skeleton of the energy indicator definitions.
//!
//! Spelling variants in the published tables are folded onto one IRI per concept
//! (`authorized_by` / `Authorized_by` / `authorizedBy` all become `gcise:authorizedBy`,
//! `om:numeric_value` becomes `om:numerical_value`, and so on).

use std::sync::OnceLock;

use crate::store::vocab::{db, foaf, gci, gcibo, gcii, gcis, gcise, gs, ic, iso37120, iso37120en, lode, om, org, ot, prov, sch, sem, so};
use crate::store::{Iri, Literal, Term};

use super::expr::{ClassExpression, Datatype, Filler, Restriction};
use super::schema::{BuildingRule, Schema, SchemaBuilder};

fn class(iri: Iri) -> Filler {
    Filler::Class(ClassExpression::Named(iri))
}

fn union(iris: impl IntoIterator<Item = Iri>) -> Filler {
    Filler::Class(ClassExpression::union(iris))
}

fn dt(d: Datatype) -> Filler {
    Filler::Datatype(d)
}

fn cardinality_unit() -> Term {
    Term::Iri(gci::iri("population_cardinality_unit"))
}

/// The built-in schema, built once.
pub fn builtin_schema() -> &'static Schema {
    static SCHEMA: OnceLock<Schema> = OnceLock::new();
    SCHEMA.get_or_init(|| build().expect("built-in schema is acyclic"))
}

fn build() -> Result<Schema, super::OntologyError> {
    let mut b = SchemaBuilder::default();
    service(&mut b);
    consumers(&mut b);
    interruptions(&mut b);
    electrical(&mut b);
    production(&mut b);
    buildings(&mut b);
    households_and_organizations(&mut b);
    foundation(&mut b);
    indicators(&mut b);
    b.build()
}

fn service(b: &mut SchemaBuilder) {
    let se = gcise::iri;
    b.subclass(se("Service"), so::iri("Service"))
        .restrict(se("Service"), Restriction::min(se("distributedBy"), 1, class(so::iri("ServiceProvider"))))
        .subclass(se("Service_Measure"), gci::iri("GCI_measure"));

    let consumer = se("ServiceConsumer");
    b.subclass(consumer.clone(), so::iri("ServiceConsumer"))
        .subclass(consumer.clone(), foaf::iri("Agent"))
        .restrict(consumer.clone(), Restriction::only(se("experiencesServiceInterruption"), class(se("ServiceInterruption"))))
        .restrict(consumer.clone(), Restriction::min(so::iri("consumes"), 1, class(se("Service"))))
        .restrict(consumer.clone(), Restriction::min(se("connectedThrough"), 1, class(se("ServiceAccount"))))
        .restrict(consumer, Restriction::min(se("authorizedBy"), 1, class(se("ServiceProvider"))));

    let group = se("ServiceConsumerGroup");
    b.restrict(group.clone(), Restriction::min(se("consistOf"), 1, class(se("ServiceConsumer"))))
        .restrict(group.clone(), Restriction::only(se("experiencesServiceInterruption"), class(se("ServiceInterruption"))))
        .restrict(group.clone(), Restriction::min(se("authorizedBy"), 1, class(se("ServiceProvider"))))
        .restrict(group.clone(), Restriction::min(so::iri("consumes"), 1, class(se("Service"))))
        .restrict(group.clone(), Restriction::min(se("using"), 1, class(se("ServiceAccount"))))
        .restrict(group.clone(), Restriction::min(se("legallyAuthorizedBy"), 1, class(gcii::iri("APurchase"))))
        .restrict(
            group,
            Restriction::some(
                se("represents_a"),
                union([org::iri("Division"), gcis::iri("Household"), org::iri("Organization")]),
            ),
        );

    let provider = se("ServiceProvider");
    b.subclass(provider.clone(), so::iri("ServiceProvider"))
        .subclass(provider.clone(), org::iri("Organization"))
        .restrict(provider.clone(), Restriction::min(se("authorizes"), 1, class(se("ServiceAccount"))))
        .restrict(provider.clone(), Restriction::min(so::iri("provides"), 1, class(se("Service"))))
        .restrict(provider, Restriction::some(ic::iri("hasAddress"), class(ic::iri("Address"))));

    let purchase = gcii::iri("APurchase");
    b.subclass(purchase.clone(), sch::iri("Offer"))
        .restrict(purchase.clone(), Restriction::some(gcii::iri("consumedBy"), class(so::iri("ServiceConsumer"))))
        .restrict(purchase.clone(), Restriction::exactly(gcii::iri("providedBy"), 1, class(so::iri("ServiceProvider"))))
        .restrict(purchase.clone(), Restriction::exactly(se("hasServiceType"), 1, class(so::iri("Service"))))
        .restrict(purchase.clone(), Restriction::some(gcii::iri("priceCurrency"), dt(Datatype::Decimal)))
        .restrict(purchase.clone(), Restriction::exactly(gcii::iri("certificationDate"), 1, dt(Datatype::DateTime)))
        .restrict(purchase, Restriction::exactly(gcii::iri("expiryDate"), 1, dt(Datatype::DateTime)));

    let account = se("ServiceAccount");
    b.subclass(account.clone(), gcii::iri("APurchase"))
        .restrict(account.clone(), Restriction::exactly(se("accountActive"), 1, dt(Datatype::Boolean)))
        .restrict(account.clone(), Restriction::exactly(se("authorizedBy"), 1, class(se("ServiceProvider"))))
        .restrict(account.clone(), Restriction::exactly(gcii::iri("providedBy"), 1, class(se("ServiceProvider"))))
        .restrict(account.clone(), Restriction::min(se("hasServiceAddress"), 1, class(ic::iri("Address"))))
        .restrict(account.clone(), Restriction::only(se("hasServiceArea"), class(gcis::iri("ServiceAreaMeasure"))))
        .restrict(account.clone(), Restriction::only(se("hasServiceType"), class(se("Service"))))
        .restrict(account.clone(), Restriction::min(gcii::iri("consumedBy"), 1, class(se("ServiceConsumer"))))
        .restrict(account.clone(), Restriction::min(se("owned_by"), 1, class(foaf::iri("Agent"))))
        .restrict(account.clone(), Restriction::min(se("hasConsumption"), 1, class(gci::iri("GCI_quantity"))))
        .restrict(account, Restriction::only(se("hasServiceInterruption"), class(se("ServiceInterruption"))));

    let quantity = se("ServiceConsumptionQuantity");
    b.subclass(quantity.clone(), gci::iri("GCI_quantity"))
        .restrict(quantity.clone(), Restriction::only(om::iri("value"), class(se("Service_Measure"))))
        .restrict(quantity.clone(), Restriction::only(se("forService"), class(se("Service"))))
        .restrict(quantity.clone(), Restriction::min(se("forService"), 1, class(se("Service"))))
        .restrict(
            quantity,
            Restriction::only(gcii::iri("consumedBy"), union([se("ServiceConsumer"), se("ServiceConsumerGroup")])),
        )
        .subclass(se("ServiceConsumptionMeasure"), se("Service_Measure"));
}

fn consumers(b: &mut SchemaBuilder) {
    let se = gcise::iri;
    let household = se("ResidentialElectricalConsumerHousehold");
    b.subclass(household.clone(), gcis::iri("Household"))
        .restrict(household.clone(), Restriction::some(se("connectedThrough"), class(se("ElectricalServiceAccount"))))
        .restrict(household, Restriction::only(se("consistOf"), class(se("ResidentialElectricalConsumer"))));

    let consumer = se("ResidentialElectricalConsumer");
    b.subclass(consumer.clone(), se("ElectricalConsumer"))
        .restrict(consumer.clone(), Restriction::some(se("connectedThrough"), class(se("ElectricalServiceAccount"))))
        .restrict(consumer.clone(), Restriction::only(so::iri("consumes"), class(se("ElectricalService"))))
        .restrict(consumer, Restriction::only(se("authorizedBy"), class(se("ElectricalServiceProvider"))));
}

fn interruptions(b: &mut SchemaBuilder) {
    let se = gcise::iri;
    let event = se("ServiceInterruption");
    b.subclass(event.clone(), lode::iri("Event"))
        .restrict(event.clone(), Restriction::only(se("causedByWeather"), dt(Datatype::Boolean)))
        .restrict(event.clone(), Restriction::exactly(ot::iri("hasDurationDescription"), 1, dt(Datatype::Decimal)))
        .restrict(event.clone(), Restriction::only(se("impactAccount"), class(se("ServiceAccount"))))
        .restrict(event.clone(), Restriction::exactly(se("num_accounts"), 1, dt(Datatype::Integer)))
        .restrict(event, Restriction::only(se("impactProvider"), class(se("ServiceProvider"))));

    b.subclass(se("ServiceInterruptionMeasure"), gci::iri("GCI_measure"))
        .restrict(se("ServiceInterruptionMeasure"), Restriction::value(om::iri("unit_of_measure"), gci::iri("interruption")))
        .subclass(se("ServiceDurationMeasure"), gci::iri("GCI_measure"))
        .restrict(se("ServiceDurationMeasure"), Restriction::value(om::iri("unit_of_measure"), om::iri("hour")));

    b.variable(se("serviceInterruptionVar"), "num_accounts", vec![se("num_accounts")])
        .variable(se("serviceDurationVar"), "HasDurationDescription", vec![ot::iri("hasDurationDescription")]);
}

fn electrical(b: &mut SchemaBuilder) {
    let se = gcise::iri;
    let kwh = || om::iri("kilowatt_hour");
    b.subclass(se("ElectricalService"), se("Service"))
        .subclass(se("ElectricalConsumerGroup"), se("ServiceConsumerGroup"))
        .restrict(se("ElectricalConsumerGroup"), Restriction::some(so::iri("consumes"), class(se("ElectricalService"))))
        .subclass(se("ElectricalConsumer"), se("ServiceConsumer"))
        .restrict(se("ElectricalConsumer"), Restriction::some(so::iri("consumes"), class(se("ElectricalService"))))
        .subclass(se("ElectricalServiceAccount"), se("ServiceAccount"))
        .restrict(se("ElectricalServiceAccount"), Restriction::only(se("hasServiceType"), class(se("ElectricalService"))));

    b.subclass(se("ElectricalServiceConsumptionMeasure"), se("ServiceConsumptionMeasure"))
        .restrict(se("ElectricalServiceConsumptionMeasure"), Restriction::value(om::iri("unit_of_measure"), kwh()))
        .subclass(se("ElectricalServiceConsumptionQuantity"), se("ServiceConsumptionQuantity"))
        .restrict(se("ElectricalServiceConsumptionQuantity"), Restriction::value(om::iri("unit_of_measure"), kwh()))
        .restrict(
            se("ElectricalServiceConsumptionQuantity"),
            Restriction::only(se("forService"), class(se("ElectricalService"))),
        )
        .variable(se("electricalConsumptionVar"), "hasElectricalConsumption", vec![gcibo::iri("hasElectricalConsumption")]);

    b.subclass(se("ElectricalServiceProvider"), se("ServiceProvider"))
        .restrict(se("ElectricalServiceProvider"), Restriction::some(se("distributes"), class(se("ElectricalService"))))
        .subclass(se("ElectricalServiceInterruption"), se("ServiceInterruption"))
        .restrict(
            se("ElectricalServiceInterruption"),
            Restriction::only(se("forService"), class(se("ElectricalService"))),
        );
}

fn production(b: &mut SchemaBuilder) {
    let se = gcise::iri;
    let kwh = || om::iri("kilowatt_hour");
    b.restrict(se("ServiceProduction"), Restriction::some(se("forService"), class(se("Service"))))
        .subclass(se("ServiceProductionMeasure"), gci::iri("GCI_measure"))
        .subclass(se("ElectricalServiceProductionMeasure"), se("ServiceProductionMeasure"))
        .restrict(se("ElectricalServiceProductionMeasure"), Restriction::value(om::iri("unit_of_measure"), kwh()))
        .subclass(se("ServiceProductionQuantity"), gci::iri("GCI_quantity"))
        .restrict(se("ServiceProductionQuantity"), Restriction::only(se("forService"), class(se("Service"))))
        .subclass(se("ElectricalServiceProductionQuantity"), se("ServiceProductionQuantity"))
        .restrict(se("ElectricalServiceProductionQuantity"), Restriction::value(om::iri("unit_of_measure"), kwh()))
        .restrict(
            se("ElectricalServiceProductionQuantity"),
            Restriction::only(om::iri("value"), class(se("ElectricalServiceProductionMeasure"))),
        )
        .restrict(
            se("ElectricalServiceProductionQuantity"),
            Restriction::only(se("forService"), class(se("ElectricalService"))),
        )
        .variable(se("electricalProductionVar"), "quantityOfProduction", vec![se("quantityOfProduction")]);

    let source = se("ElectricalPowerGenerationSource");
    b.subclass(source.clone(), se("ServiceProduction")).restrict(
        source.clone(),
        Restriction::exactly(se("quantityOfProduction"), 1, class(se("ElectricalServiceProductionQuantity"))),
    );
    b.subclass(se("NonRenewableSource"), sem::iri("Not_Renewable_Energy_Source"))
        .subclass(se("NonRenewableSource"), source.clone())
        .subclass(se("RenewableSource"), sem::iri("Renewable_Energy_Source"))
        .subclass(se("RenewableSource"), source);
    for (local, external) in [("Oil", "Oil"), ("Natural_Gas", "Natural_Gas"), ("Coal", "Coal"), ("Nuclear", "Nuclear")] {
        b.subclass(se(local), sem::iri(external)).subclass(se(local), se("NonRenewableSource"));
    }
    for (local, external) in [
        ("Biomass", Some("Biomass")),
        ("Hydro_Energy", Some("Hydro_Energy")),
        ("Geothermal_Energy", Some("Geotherhmal_Energy")),
        ("Solar_Energy", Some("Solar")),
        ("Tide", None),
        ("Wave", None),
        ("Wind_Energy", None),
    ] {
        if let Some(external) = external {
            b.subclass(se(local), sem::iri(external));
        }
        b.subclass(se(local), se("RenewableSource"));
    }
}

fn buildings(b: &mut SchemaBuilder) {
    let bo = gcibo::iri;
    let building = bo("Building");
    b.subclass(building.clone(), db::iri("Building"))
        .restrict(building.clone(), Restriction::exactly(ic::iri("hasAddress"), 1, class(ic::iri("Address"))))
        .restrict(building.clone(), Restriction::some(bo("hasUnitAddress"), class(bo("TenantSpace"))))
        .restrict(building.clone(), Restriction::exactly(bo("hasFloorArea"), 1, class(bo("FloorArea_Quantity"))))
        .restrict(building.clone(), Restriction::exactly(bo("hasResFloorArea"), 1, class(bo("FloorArea_Quantity"))))
        .restrict(
            building.clone(),
            Restriction::some(
                bo("occupied_by"),
                union([gcis::iri("Household"), org::iri("Division"), org::iri("Organization")]),
            ),
        )
        .restrict(
            building.clone(),
            Restriction::only(bo("hasElectricalConsumption"), class(gcise::iri("ElectricalServiceConsumptionQuantity"))),
        )
        .restrict(building.clone(), Restriction::only(bo("hasTenantSpace"), class(bo("TenantSpace"))))
        .restrict(building.clone(), Restriction::only(bo("hasTenancy"), class(bo("Tenant"))))
        .restrict(building.clone(), Restriction::exactly(org::iri("has_Ownership"), 1, class(org::iri("Ownership"))))
        .restrict(building.clone(), Restriction::min(bo("owned_by"), 1, class(foaf::iri("Agent"))));

    for kind in ["CommercialBuilding", "IndustrialBuilding", "PublicBuilding", "ResidentialBuilding"] {
        b.subclass(bo(kind), building.clone());
    }
    b.restrict(
        bo("PublicBuilding"),
        Restriction::only(org::iri("has_Ownership"), class(org::iri("GovernmentOrganization"))),
    )
    .rule(bo("PublicBuilding"), BuildingRule::GovernmentOwned)
    .restrict(bo("ResidentialBuilding"), Restriction::min(bo("hasHouseholds"), 1, class(gcis::iri("Household"))))
    .rule(bo("ResidentialBuilding"), BuildingRule::ResidentialFloorArea);

    b.subclass(bo("Tenant"), foaf::iri("Agent"))
        .restrict(bo("Tenant"), Restriction::min(bo("occupies"), 1, class(bo("TenantSpace"))))
        .restrict(
            bo("Tenant"),
            Restriction::only(
                bo("represents"),
                union([org::iri("Organization"), gcis::iri("Household"), org::iri("Division")]),
            ),
        );

    let space = bo("TenantSpace");
    b.restrict(space.clone(), Restriction::some(bo("hasUnitIndicator"), dt(Datatype::Any)))
        .restrict(space.clone(), Restriction::exactly(bo("insideBuilding"), 1, class(building)))
        .restrict(space.clone(), Restriction::min(bo("occupied_by"), 1, class(bo("Tenant"))))
        .restrict(space, Restriction::min(bo("connectedServiceAccounts"), 1, class(gcise::iri("ServiceAccount"))));

    b.subclass(bo("FloorArea_Measure"), gci::iri("GCI_measure"))
        .restrict(bo("FloorArea_Measure"), Restriction::value(om::iri("unit_of_measure"), om::iri("square_metre")))
        .subclass(bo("FloorArea_Quantity"), gci::iri("GCI_quantity"))
        .restrict(bo("FloorArea_Quantity"), Restriction::value(om::iri("unit_of_measure"), om::iri("square_metre")))
        .restrict(bo("FloorArea_Quantity"), Restriction::only(om::iri("value"), class(bo("FloorArea_Measure"))))
        .variable(bo("floorAreaVar"), "hasFloorArea", vec![bo("hasFloorArea")]);
}

/// Size quantities for households, organizations and divisions. The Shelter tables
/// appear twice in slightly different forms; both sets of restrictions are kept.
fn households_and_organizations(b: &mut SchemaBuilder) {
    let numeric = || Restriction::exactly(om::iri("numerical_value"), 1, dt(Datatype::Numeric));
    let people = || Restriction::value(om::iri("unit_of_measure"), cardinality_unit());

    b.restrict(gcis::iri("Household"), Restriction::only(gcis::iri("hasSize"), class(gcis::iri("Household_size"))))
        .restrict(gcis::iri("Household"), Restriction::only(gcis::iri("hasMember"), class(sch::iri("Person"))));

    let size = gcis::iri("Household_size");
    let size_measure = gcis::iri("Household_size_measure");
    b.subclass(size.clone(), gci::iri("GCI_quantity"))
        .restrict(size.clone(), Restriction::only(om::iri("value"), class(size_measure.clone())))
        .restrict(size.clone(), Restriction::exactly(om::iri("value"), 1, class(size_measure.clone())))
        .restrict(size, people())
        .subclass(size_measure.clone(), gci::iri("GCI_measure"))
        .restrict(size_measure.clone(), people())
        .restrict(size_measure.clone(), numeric());

    let average = gcis::iri("Average_household_size");
    b.subclass(average.clone(), gci::iri("GCI_quantity"))
        .restrict(average.clone(), Restriction::only(gci::iri("for_city"), class(gci::iri("City"))))
        .restrict(average.clone(), Restriction::exactly(gci::iri("for_city"), 1, class(gci::iri("City"))))
        .restrict(average.clone(), Restriction::only(om::iri("value"), class(size_measure.clone())))
        .restrict(average.clone(), Restriction::exactly(om::iri("value"), 1, class(size_measure.clone())))
        .restrict(average, people());

    let average_measure = gcis::iri("Average_household_size_Measure");
    b.subclass(average_measure.clone(), gci::iri("GCI_measure"))
        .restrict(average_measure.clone(), Restriction::some(prov::iri("wasDerivedFrom"), class(size_measure.clone())))
        .restrict(average_measure.clone(), Restriction::exactly(prov::iri("wasDerivedFrom"), 1, class(size_measure)))
        .restrict(average_measure.clone(), people())
        .restrict(average_measure, numeric());

    let o = org::iri;
    b.subclass(o("GovernmentOrganization"), o("Organization"))
        .restrict(o("Organization"), Restriction::only(gcis::iri("hasSize"), class(gcibo::iri("Organization_size"))))
        .restrict(o("Organization"), Restriction::only(o("consistsOf"), class(o("Division"))))
        .restrict(o("Organization"), Restriction::only(o("has_Ownership"), class(o("Ownership"))))
        .restrict(o("Organization"), Restriction::exactly(o("hasLegalName"), 1, dt(Datatype::String)))
        .restrict(o("Division"), Restriction::some(o("divisionOf"), class(o("Organization"))))
        .restrict(o("Division"), Restriction::only(gcis::iri("hasSize"), class(gcibo::iri("Organization_Division_size"))));

    for (quantity, measure) in [
        ("Organization_size", "Organization_size_measure"),
        ("Organization_Division_size", "Organization_Division_size_Measure"),
    ] {
        let (quantity, measure) = (gcibo::iri(quantity), gcibo::iri(measure));
        b.subclass(quantity.clone(), gci::iri("GCI_quantity"))
            .restrict(quantity.clone(), Restriction::only(om::iri("value"), class(measure.clone())))
            .restrict(quantity, people())
            .subclass(measure.clone(), gci::iri("GCI_measure"))
            .restrict(measure.clone(), people())
            .restrict(measure, numeric());
    }
}

fn foundation(b: &mut SchemaBuilder) {
    b.subclass(sch::iri("City"), gci::iri("City"))
        .subclass(gci::iri("Population_size"), gci::iri("GCI_quantity"))
        .subclass(gci::iri("Population"), gs::iri("Population"))
        .subclass(gci::iri("Product_Quantity"), gci::iri("GCI_quantity"));

    let size = gci::iri("City_Population_Size");
    b.subclass(size.clone(), gci::iri("Population_size"))
        .restrict(size.clone(), Restriction::exactly(gci::iri("cardinality_of"), 1, class(gci::iri("City_Population"))))
        .restrict(size, Restriction::value(om::iri("unit_of_measure"), cardinality_unit()));

    let population = gci::iri("City_Population");
    b.subclass(population.clone(), gci::iri("Population"))
        .restrict(population.clone(), Restriction::exactly(gci::iri("defined_by"), 1, class(gci::iri("Resident"))))
        .restrict(population.clone(), Restriction::some(gci::iri("function_of"), class(gcis::iri("Average_household_size"))))
        .restrict(population, Restriction::exactly(gci::iri("located_in"), 1, class(gci::iri("City"))));
}

/// The seven indicator classes and the subclass skeleton of their numerator and
/// denominator classes. The aggregation semantics live in the indicator definitions.
fn indicators(b: &mut SchemaBuilder) {
    let en = iso37120en::iri;
    let parts: [(&str, &str, &str, Iri); 7] = [
        ("7.1", "7.1_Total_Residential_Electrical_Consumption_Quantity", "City_Population_Size", gci::iri("kwh_per_pc")),
        (
            "7.2",
            "7.2_Population_with_authorized_electrical_service_size",
            "City_Population_Size",
            om::iri("percent"),
        ),
        (
            "7.3",
            "7.3_Total_PublicBuilding_Electrical_Consumption_Quantity",
            "7.3_Total_PublicBuilding_FloorSpace_Quantity",
            gci::iri("kwh_per_square_metre"),
        ),
        (
            "7.4",
            "7.4_Total_Electrical_Production_From_Renewables_Quantity",
            "7.4_Total_Electrical_Production_Quantity",
            om::iri("percent"),
        ),
        ("7.5", "7.5_Total_Electrical_Consumption_Quantity", "City_Population_Size", gci::iri("kwh_per_pc")),
        (
            "7.6",
            "7.6_Total_Count_of_Electrical_Interruptions",
            "7.6_Customer_Account_Size",
            gci::iri("interruption_per_year"),
        ),
        (
            "7.7",
            "7.7_Sum_of_Duration_of_Electrical_Interruptions",
            "7.7_Total_Count_of_Electrical_Interruptions",
            om::iri("hour"),
        ),
    ];
    for (id, numerator, denominator, unit) in parts {
        let indicator = iso37120::iri(id);
        let denominator = if denominator == "City_Population_Size" { gci::iri(denominator) } else { en(denominator) };
        b.subclass(indicator.clone(), iso37120::iri("Energy"))
            .restrict(indicator.clone(), Restriction::exactly(om::iri("numerator"), 1, class(en(numerator))))
            .restrict(indicator.clone(), Restriction::exactly(om::iri("denominator"), 1, class(denominator)))
            .restrict(indicator, Restriction::value(om::iri("unit_of_measure"), unit));
    }

    let se = gcise::iri;
    let sum = || gs::iri("Sum");
    let count = || gs::iri("Cardinality");
    let population = || gs::iri("Population");
    let axioms: Vec<(Iri, Iri)> = vec![
        (en("7.1_ResidentialBuilding"), gcibo::iri("ResidentialBuilding")),
        (en("7.1_Total_Residential_Electrical_Consumption_Quantity"), se("ElectricalServiceConsumptionQuantity")),
        (en("7.1_Total_Residential_Electrical_Consumption_Quantity"), sum()),
        (en("7.1_Population_of_Residential_Buildings"), population()),
        (en("7.2_Population_with_authorized_electrical_service_size"), gci::iri("Product_Quantity")),
        (en("7.2_Population_of_ElectricallyServicedHousehold_size"), gci::iri("Population_size")),
        (en("7.2_Population_of_ElectricallyServicedHouseholds"), gci::iri("Population")),
        (en("7.3_Total_PublicBuilding_Electrical_Consumption_Quantity"), se("ElectricalServiceConsumptionQuantity")),
        (en("7.3_Total_PublicBuilding_Electrical_Consumption_Quantity"), sum()),
        (en("7.3_Population_of_Public_Buildings"), population()),
        (en("7.3_Total_PublicBuilding_FloorSpace_Quantity"), gcibo::iri("FloorArea_Quantity")),
        (en("7.3_Total_PublicBuilding_FloorSpace_Quantity"), sum()),
        (en("7.4_Total_Electrical_Production_From_Renewables_Quantity"), se("ElectricalServiceProductionQuantity")),
        (en("7.4_Total_Electrical_Production_From_Renewables_Quantity"), sum()),
        (en("7.4_RenewableSources"), population()),
        (en("7.4_Total_Electrical_Production_Quantity"), se("ElectricalServiceProductionQuantity")),
        (en("7.4_Total_Electrical_Production_Quantity"), sum()),
        (en("7.4_Total_Production_Population"), population()),
        (en("7.5_Total_Electrical_Consumption_Quantity"), se("ElectricalServiceConsumptionQuantity")),
        (en("7.5_Total_Electrical_Consumption_Quantity"), sum()),
        (en("7.5_Total_Building_Population"), population()),
        (en("7.6_Total_Count_of_Electrical_Interruptions"), gci::iri("GCI_quantity")),
        (en("7.6_Total_Count_of_Electrical_Interruptions"), sum()),
        (en("7.6_Population_of_ElectricalService_Interruptions"), population()),
        (en("7.6_ElectricalServiceInterruption"), se("ElectricalServiceInterruption")),
        (en("7.6_Customer_Account_Size"), gci::iri("GCI_quantity")),
        (en("7.6_Customer_Account_Size"), count()),
        (en("7.6_Customer_Account_Pop"), population()),
        (en("7.7_Sum_of_Duration_of_Electrical_Interruptions"), gci::iri("GCI_quantity")),
        (en("7.7_Sum_of_Duration_of_Electrical_Interruptions"), sum()),
        (en("7.7_Electrical_Service_Interruption_Pop"), population()),
        (en("7.7_Electrical_Service_Interruption"), se("ElectricalServiceInterruption")),
        (en("7.7_Total_Count_of_Electrical_Interruptions"), gci::iri("GCI_quantity")),
        (en("7.7_Total_Count_of_Electrical_Interruptions"), count()),
    ];
    for (child, parent) in axioms {
        b.subclass(child, parent);
    }
    let not_weather = || Restriction::value(se("causedByWeather"), Literal::boolean(false));
    b.restrict(en("7.6_ElectricalServiceInterruption"), not_weather())
        .restrict(en("7.7_Electrical_Service_Interruption"), not_weather());
}
