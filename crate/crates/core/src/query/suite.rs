use rust_decimal::Decimal;
use serde::Serialize;

use crate::store::{PrefixMap, Term};

use super::exec::{cell_text, ResultTable};

/// What a competency question asks for: a fact, a definition check, a consistency
/// check, or a diagnostic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuestionKind {
    F,
    CD,
    CI,
    D,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Competency {
    pub id: &'static str,
    pub kind: QuestionKind,
    pub question: &'static str,
    pub text: &'static str,
    /// Expected rows on the bundled Toronto data; `None` when the answer depends on the
    /// data loaded.
    pub expected: Option<Vec<Vec<&'static str>>>,
    /// How the query differs from the published listing.
    pub notes: &'static str,
}

const TORONTO: &str = "PREFIX : <http://example.org/toronto/>\n";

macro_rules! q {
    ($body:expr) => {
        concat!("PREFIX : <http://example.org/toronto/>\n", $body)
    };
}

/// The nine questions answered on the Toronto data, then templates for the remaining
/// indicators' fact questions.
pub fn competency_suite() -> Vec<Competency> {
    debug_assert!(q!("").starts_with(TORONTO));
    use QuestionKind::*;
    let fixed = |id, kind, question, text, expected: &[&[&'static str]], notes| Competency {
        id,
        kind,
        question,
        text,
        expected: Some(expected.iter().map(|r| r.to_vec()).collect()),
        notes,
    };
    let open = |id, kind, question, text, notes| Competency { id, kind, question, text, expected: None, notes };
    vec![
        fixed(
            "7.1-1",
            F,
            "What city is the indicator for?",
            q!("SELECT ?cityname WHERE { :7.1_ex gci:for_city ?city . ?city rdfs:label ?cityname . }"),
            &[&["Toronto"]],
            "",
        ),
        fixed(
            "7.1-2",
            F,
            "What is the total population of the city?",
            q!("SELECT ?city ?city_pop_value WHERE {
  ?cityPop rdf:type gci:City_Population .
  ?cityPop gci:located_in ?city .
  ?cityPopSize gci:cardinality_of ?cityPop .
  ?cityPopSize om:value ?cityPopSize_measure .
  ?cityPopSize_measure om:numerical_value ?city_pop_value .
}"),
            &[&["gn:6167865", "2615000"]],
            "",
        ),
        fixed(
            "7.1-3",
            F,
            "Is Toronto_Building_01 a residential building?",
            q!("SELECT ?BuildingType WHERE {
  :Toronto_Building_01 a ?BuildingType .
  ?BuildingType rdfs:subClassOf gcibo:Building .
}"),
            &[&["ResidentialBuilding"]],
            "instance typing is rdf:type, not a subclass axiom; restricted to direct kinds of gcibo:Building",
        ),
        fixed(
            "7.1-4",
            CD,
            "Who owns Toronto_Building_01 and what sector owns it?",
            q!("SELECT ?Owner ?Sector WHERE {
  :Toronto_Building_01 gcibo:owned_by ?Owner .
  :Toronto_Building_01 org:has_Ownership ?Sector .
}"),
            &[&["JohnDoe", "Privately_owned"]],
            "property spelled org:has_Ownership as in the schema; the published answer misspells JohnDoe",
        ),
        fixed(
            "7.1-5",
            F,
            "What share of Toronto_Building_01's floor space is residential?",
            q!("SELECT (?Res_FS_Value/?Tot_FS_Value) AS ?percentage WHERE {
  :Toronto_Building_01 gcibo:hasFloorArea ?Tot_FS .
  ?Tot_FS om:value ?Tot_FS_m .
  ?Tot_FS_m om:numerical_value ?Tot_FS_Value .
  :Toronto_Building_01 gcibo:hasResFloorArea ?Res_FS .
  ?Res_FS om:value ?Res_FS_m .
  ?Res_FS_m om:numerical_value ?Res_FS_Value .
}"),
            &[&["0.90"]],
            "variable names unified; the measure's numerical value is read explicitly",
        ),
        fixed(
            "7.1-6",
            F,
            "How much energy was used per year in residential buildings?",
            q!("SELECT ?numeric_value ?unit WHERE {
  :7.1_ex_Res_elec_Consumption om:value ?value .
  ?value om:numerical_value ?numeric_value .
  ?value om:unit_of_measure ?unit .
}"),
            &[&["5,073,000,000", "Kilowatt_hour"]],
            "unit read through om:unit_of_measure",
        ),
        fixed(
            "7.1-7",
            F,
            "What organizations provide electrical service in Toronto?",
            q!("SELECT ?ServiceProvider ?ServiceAccount WHERE {
  ?ServiceAccount a gcise:ServiceAccount .
  ?ServiceAccount gcii:providedBy ?ServiceProvider .
  ?ServiceProvider a gcise:ServiceProvider .
  ?ServiceAccount gcise:hasServiceAddress ?Address .
  ?Address ic:hasCity ?city .
  ?city rdfs:label ?label .
  FILTER regex(?label, \"Toronto\")
}"),
            &[&["Toronto_Hydro", "ServiceAccount_01"]],
            "provider bound through a variable; variable case and FILTER punctuation fixed",
        ),
        fixed(
            "7.1-8",
            CI,
            "Which service provider does each Toronto building use?",
            q!("SELECT DISTINCT ?ServiceProvider ?Building WHERE {
  ?ServiceProvider a gcise:ServiceProvider .
  ?ServiceProvider gcise:authorizes ?ServiceAccount .
  ?ServiceAccount gcise:hasServiceAddress ?Address .
  ?Building a db:Building .
  ?Building ic:hasAddress ?Address .
}"),
            &[&["Toronto_Hydro", "Toronto_Building_01"]],
            "",
        ),
        fixed(
            "7.1-9",
            F,
            "How many service accounts are there in Toronto_Building_01?",
            q!("SELECT (COUNT(?ServiceAccount) AS ?C) WHERE {
  ?ServiceAccount a gcise:ServiceAccount .
  ?ServiceAccount gcise:hasServiceAddress ?Address .
  ?Address gcibo:hasBuilding :Toronto_Building_01 .
}"),
            &[&["1"]],
            "",
        ),
        open(
            "7.2-1",
            F,
            "How many electrical service accounts are there in the city?",
            "SELECT ?city (COUNT(DISTINCT ?account) AS ?accounts) WHERE {
  ?account a gcise:ElectricalServiceAccount .
  ?account gcise:hasServiceAddress ?address .
  ?address ic:hasCity ?city .
}",
            "",
        ),
        open(
            "7.2-3",
            F,
            "How many households are in the city?",
            "SELECT ?city (COUNT(?household) AS ?households) WHERE {
  ?household a gcis:Household .
  ?household gci:located_in ?city .
}",
            "",
        ),
        open(
            "7.2-5",
            F,
            "What is the average number of people living in each household?",
            "SELECT ?city ?size WHERE {
  ?q a gcis:Average_household_size .
  ?q gci:for_city ?city .
  ?q om:value ?m .
  ?m om:numerical_value ?size .
}",
            "",
        ),
        open(
            "7.2-6",
            F,
            "How many households does each building have?",
            "SELECT ?building (COUNT(?household) AS ?households) WHERE {
  ?building gcibo:hasHouseholds ?household .
}",
            "",
        ),
        open(
            "7.2-7",
            D,
            "Which account holders hold more than one account?",
            "SELECT ?holder (COUNT(?account) AS ?accounts) WHERE {
  ?account a gcise:ServiceAccount .
  ?account gcise:owned_by ?holder .
}",
            "lists accounts per holder; holders with a count above 1 answer the question",
        ),
        open(
            "7.3-1",
            F,
            "Which buildings are owned by the government?",
            "SELECT ?building ?owner WHERE {
  ?building a gcibo:Building .
  ?building org:has_Ownership ?owner .
  ?owner a org:GovernmentOrganization .
}",
            "",
        ),
        open(
            "7.3-2",
            F,
            "How many public buildings are in the city?",
            "SELECT (COUNT(?building) AS ?buildings) WHERE { ?building a gcibo:PublicBuilding . }",
            "",
        ),
        open(
            "7.3-3",
            F,
            "What is the floor area of each public building?",
            "SELECT ?building ?area WHERE {
  ?building a gcibo:PublicBuilding .
  ?building gcibo:hasFloorArea ?q .
  ?q om:value ?m .
  ?m om:numerical_value ?area .
}",
            "",
        ),
        open(
            "7.4-4",
            F,
            "What are the different sources of electricity generation?",
            "SELECT ?source ?kind WHERE {
  ?source a ?kind .
  ?kind rdfs:subClassOf gcise:RenewableSource .
}",
            "",
        ),
        open(
            "7.4-5",
            F,
            "Which sources are renewable?",
            "SELECT ?source WHERE { ?source a gcise:RenewableSource . }",
            "",
        ),
        open(
            "7.5-1",
            F,
            "What is the electrical usage of each building per year?",
            "SELECT ?building ?kwh WHERE {
  ?building a gcibo:Building .
  ?building gcibo:hasElectricalConsumption ?q .
  ?q om:value ?m .
  ?m om:numerical_value ?kwh .
}",
            "",
        ),
        open(
            "7.5-2",
            F,
            "Who reported the electrical usage?",
            "SELECT ?q ?agent WHERE {
  ?q a gcise:ElectricalServiceConsumptionQuantity .
  ?q prov:wasAttributedTo ?agent .
}",
            "",
        ),
        open(
            "7.6-5",
            F,
            "How many service interruptions were caused by extreme weather?",
            "SELECT (COUNT(?i) AS ?interruptions) WHERE {
  ?i a gcise:ElectricalServiceInterruption .
  ?i gcise:causedByWeather true .
}",
            "",
        ),
        open(
            "7.6-6",
            F,
            "How many interruptions were there in the city?",
            "SELECT ?city (COUNT(?i) AS ?interruptions) WHERE {
  ?i a gcise:ElectricalServiceInterruption .
  ?i gci:located_in ?city .
}",
            "",
        ),
        open(
            "7.6-7",
            F,
            "Which accounts were impacted by each interruption?",
            "SELECT ?i ?account WHERE {
  ?i a gcise:ElectricalServiceInterruption .
  ?i gcise:impactAccount ?account .
}",
            "",
        ),
        open(
            "7.7-1",
            F,
            "How long was each interruption not caused by weather?",
            "SELECT ?i ?hours WHERE {
  ?i a gcise:ElectricalServiceInterruption .
  ?i gcise:causedByWeather false .
  ?i ot:hasDurationDescription ?hours .
}",
            "",
        ),
        open(
            "7.7-2",
            F,
            "What is the total number of interruptions?",
            "SELECT (COUNT(?i) AS ?interruptions) WHERE { ?i a gcise:ElectricalServiceInterruption . }",
            "",
        ),
    ]
}

/// Compares one cell with its expected text. Numbers compare by value (thousands
/// separators allowed); anything else compares by local name, ignoring case.
pub fn cell_matches(prefixes: &PrefixMap, expected: &str, actual: &Term) -> bool {
    let expected_num = expected.replace(',', "").parse::<Decimal>().ok();
    let actual_num = actual.as_literal().and_then(crate::measures::literal_decimal);
    if let (Some(e), Some(a)) = (expected_num, actual_num) {
        return e == a;
    }
    let local = |s: &str| s.rsplit([':', '#', '/']).next().unwrap_or(s).to_string();
    let actual = match actual {
        Term::Iri(i) => prefixes.local_name(i),
        other => local(&cell_text(prefixes, other)),
    };
    local(expected).eq_ignore_ascii_case(&actual)
}

/// `Ok` when the table has exactly the expected rows.
pub fn check_expected(prefixes: &PrefixMap, table: &ResultTable, expected: &[Vec<&str>]) -> Result<(), String> {
    let shown = || table.report(prefixes).rows;
    if table.rows.len() != expected.len() {
        return Err(format!("expected {} row(s), got {:?}", expected.len(), shown()));
    }
    for (row, want) in table.rows.iter().zip(expected) {
        if row.len() != want.len() || !row.iter().zip(want).all(|(a, e)| cell_matches(prefixes, e, a)) {
            return Err(format!("expected {expected:?}, got {:?}", shown()));
        }
    }
    Ok(())
}
