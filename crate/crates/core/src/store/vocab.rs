//! Namespace strings and the handful of IRIs the engine refers to by name.
//!
//! The GCI namespaces are copied verbatim from the published prefix table; several of
//! them have no trailing `#` or `/`, so `gci:City` expands to
//! `http://ontology.eil.utoronto.ca/GCI/Foundation/GCI-Foundation.owlCity`.

use super::term::Iri;

/// The published prefix table, in table order.
pub const GCI_PREFIXES: &[(&str, &str)] = &[
    (db::PREFIX, db::NS),
    (foaf::PREFIX, foaf::NS),
    (gci::PREFIX, gci::NS),
    (gcibo::PREFIX, gcibo::NS),
    (gcii::PREFIX, gcii::NS),
    (gcis::PREFIX, gcis::NS),
    (gcise::PREFIX, gcise::NS),
    (gn::PREFIX, gn::NS),
    (gs::PREFIX, gs::NS),
    (ic::PREFIX, ic::NS),
    (iso37120::PREFIX, iso37120::NS),
    (iso37120en::PREFIX, iso37120en::NS),
    (iso37120s::PREFIX, iso37120s::NS),
    (lode::PREFIX, lode::NS),
    (om::PREFIX, om::NS),
    (org::PREFIX, org::NS),
    (ot::PREFIX, ot::NS),
    (pr::PREFIX, pr::NS),
    (sch::PREFIX, sch::NS),
    (sem::PREFIX, sem::NS),
    (so::PREFIX, so::NS),
    (sumo::PREFIX, sumo::NS),
];

/// The W3C vocabularies every document may use without declaring them (`prov` is the
/// hash-terminated PROV-O namespace, next to the table's `pr`).
pub const W3C_PREFIXES: &[(&str, &str)] = &[
    (owl::PREFIX, owl::NS),
    (prov::PREFIX, prov::NS),
    (rdf::PREFIX, rdf::NS),
    (rdfs::PREFIX, rdfs::NS),
    (xsd::PREFIX, xsd::NS),
];

macro_rules! namespace {
    ($module:ident, $prefix:literal, $ns:literal) => {
        pub mod $module {
            use super::Iri;
            pub const PREFIX: &str = $prefix;
            pub const NS: &str = $ns;
            pub fn iri(local: &str) -> Iri {
                Iri::from_parts(NS, local)
            }
        }
    };
}

namespace!(db, "db", "http://dbpedia.org/ontology/");
namespace!(foaf, "foaf", "http://xmlns.com/foaf");
namespace!(gci, "gci", "http://ontology.eil.utoronto.ca/GCI/Foundation/GCI-Foundation.owl");
namespace!(gcibo, "gcibo", "http://ontology.eil.utoronto.ca/GCI/BuildingOccupancy/GCI-BuildingOccupancy.owl");
namespace!(gcii, "gcii", "http://ontology.eil.utoronto.ca/GCI/Innovation/GCI-Innovation.owl");
namespace!(gcis, "gcis", "http://ontology.eil.utoronto.ca/GCI/Shelters/GCI-Shelters.owl");
namespace!(gcise, "gcise", "http://ontology.eil.utoronto.ca/GCI/Energy/GCI-Service.owl");
namespace!(gn, "gn", "http://sws.geonames.org/");
namespace!(gs, "gs", "http://ontology.eil.utoronto.ca/govstat.owl");
namespace!(ic, "ic", "http://ontology.eil.utoronto.ca/icontact.owl");
namespace!(iso37120, "iso37120", "http://ontology.eil.utoronto.ca/ISO37120.owl");
namespace!(iso37120en, "iso37120en", "http://ontology.eil.utoronto.ca/GCI/ISO37120/Energy.owl#");
namespace!(iso37120s, "iso37120s", "http://ontology.eil.utoronto.ca/GCI/ISO37120/Shelters.owl");
namespace!(lode, "lode", "http://linkedevents.org/ontology/");
namespace!(om, "om", "http://www.wurvoc.org/vocabularies/om-1.8");
namespace!(org, "org", "http://ontology.eil.utoronto.ca/organization.owl");
namespace!(ot, "ot", "http://www.w3.org/2006/time");
namespace!(pr, "pr", "http://www.w3.org/ns/prov");
namespace!(sch, "sch", "http://schema.org/");
namespace!(sem, "sem", "http://semanco-tools.eu/ontology-releases/eu/semanco/ontology/SEMANTCO/SEMANTCO.owl");
namespace!(so, "so", "http://purl.org/ontology/service");
namespace!(sumo, "sumo", "http://www.ontologyportal.org/SUMO.owl#");
namespace!(owl, "owl", "http://www.w3.org/2002/07/owl#");
namespace!(rdfs, "rdfs", "http://www.w3.org/2000/01/rdf-schema#");
namespace!(prov, "prov", "http://www.w3.org/ns/prov#");

pub mod rdf {
    use super::Iri;
    pub const PREFIX: &str = "rdf";
    pub const NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    pub fn iri(local: &str) -> Iri {
        Iri::from_parts(NS, local)
    }
    pub fn type_() -> Iri {
        iri("type")
    }
}

pub mod xsd {
    use super::Iri;
    pub const PREFIX: &str = "xsd";
    pub const NS: &str = "http://www.w3.org/2001/XMLSchema#";
    pub fn iri(local: &str) -> Iri {
        Iri::from_parts(NS, local)
    }
    pub fn string() -> Iri {
        iri("string")
    }
    pub fn integer() -> Iri {
        iri("integer")
    }
    pub fn decimal() -> Iri {
        iri("decimal")
    }
    pub fn boolean() -> Iri {
        iri("boolean")
    }
    pub fn date_time() -> Iri {
        iri("dateTime")
    }
}
