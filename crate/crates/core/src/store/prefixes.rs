use std::collections::BTreeMap;

use super::term::{is_absolute_iri, Iri};
use super::vocab::{GCI_PREFIXES, W3C_PREFIXES};

/// Prefix → namespace table. A prefix maps to exactly one namespace; redeclaring a
/// prefix replaces the old binding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixMap {
    entries: BTreeMap<String, String>,
}

impl Default for PrefixMap {
    /// The GCI prefix table plus `rdf`, `rdfs`, `owl` and `xsd`.
    fn default() -> Self {
        let entries = GCI_PREFIXES
            .iter()
            .chain(W3C_PREFIXES)
            .map(|(p, ns)| (p.to_string(), ns.to_string()))
            .collect();
        PrefixMap { entries }
    }
}

impl PrefixMap {
    pub fn empty() -> Self {
        PrefixMap { entries: BTreeMap::new() }
    }

    pub fn insert(&mut self, prefix: impl Into<String>, namespace: impl Into<String>) {
        self.entries.insert(prefix.into(), namespace.into());
    }

    /// Overlays `other` on top of `self`; `other` wins on conflicts.
    pub fn extend(&mut self, other: &PrefixMap) {
        for (p, ns) in &other.entries {
            self.entries.insert(p.clone(), ns.clone());
        }
    }

    pub fn namespace(&self, prefix: &str) -> Option<&str> {
        self.entries.get(prefix).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(p, ns)| (p.as_str(), ns.as_str()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Expands `prefix:local`. `None` when the prefix is not declared.
    pub fn expand(&self, prefix: &str, local: &str) -> Option<Iri> {
        let ns = self.namespace(prefix)?;
        let full = format!("{ns}{local}");
        is_absolute_iri(&full).then(|| Iri::from_parts(ns, local))
    }

    /// Expands a `prefix:local` string.
    pub fn expand_curie(&self, curie: &str) -> Option<Iri> {
        let (prefix, local) = curie.split_once(':')?;
        self.expand(prefix, local)
    }

    /// The prefixed form of `iri` using the longest matching namespace whose remainder is
    /// a valid local name, so that re-expanding yields the same IRI.
    pub fn compact(&self, iri: &Iri) -> Option<(&str, String)> {
        self.entries
            .iter()
            .filter_map(|(p, ns)| {
                let local = iri.as_str().strip_prefix(ns.as_str())?;
                is_valid_local_name(local).then(|| (p.as_str(), ns.len(), local.to_string()))
            })
            .max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(a.0)))
            .map(|(p, _, local)| (p, local))
    }

    /// Local part of an IRI for display: the compacted local name when a prefix
    /// applies, otherwise the text after the last `#` or `/`.
    pub fn local_name(&self, iri: &Iri) -> String {
        if let Some((_, local)) = self.compact(iri) {
            if !local.is_empty() {
                return local;
            }
        }
        let s = iri.as_str();
        s.rsplit(['#', '/']).next().unwrap_or(s).to_string()
    }

    /// `prefix:local` when possible, `<iri>` otherwise.
    pub fn display(&self, iri: &Iri) -> String {
        match self.compact(iri) {
            Some((p, local)) => format!("{p}:{local}"),
            None => format!("<{}>", iri.as_str()),
        }
    }
}

pub(crate) fn is_prefix_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '-'
}

pub(crate) fn is_local_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.')
}

/// Local names may start with a digit (`iso37120:7.1`) but may not end with `.`.
pub(crate) fn is_valid_local_name(local: &str) -> bool {
    local.chars().all(is_local_char) && !local.ends_with('.')
}

pub(crate) fn is_valid_prefix(prefix: &str) -> bool {
    prefix.is_empty()
        || (prefix.starts_with(|c: char| c.is_alphabetic())
            && prefix.chars().all(is_prefix_char)
            && !prefix.ends_with('.'))
}
