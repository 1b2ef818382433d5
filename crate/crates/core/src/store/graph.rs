use std::collections::{BTreeSet, HashMap};

use super::prefixes::PrefixMap;
use super::term::{Iri, Literal, Term, Triple};
use super::vocab::rdf;

/// Collects triples during load. Call [`GraphBuilder::freeze`] to obtain a queryable
/// [`Graph`].
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    triples: BTreeSet<Triple>,
    prefixes: PrefixMap,
}

impl GraphBuilder {
    pub fn new(prefixes: PrefixMap) -> Self {
        GraphBuilder { triples: BTreeSet::new(), prefixes }
    }

    /// Returns `false` when the triple was already present.
    pub fn insert(&mut self, triple: Triple) -> bool {
        self.triples.insert(triple)
    }

    pub fn extend(&mut self, triples: impl IntoIterator<Item = Triple>) {
        self.triples.extend(triples);
    }

    pub fn remove(&mut self, triple: &Triple) -> bool {
        self.triples.remove(triple)
    }

    pub fn prefixes_mut(&mut self) -> &mut PrefixMap {
        &mut self.prefixes
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn freeze(self) -> Graph {
        Graph::from_sorted(self.triples.into_iter().collect(), self.prefixes)
    }
}

/// An immutable, indexed set of triples.
///
/// Triples are kept sorted; every index stores positions in ascending order, so all
/// match results come back in the same lexicographic order regardless of how the graph
/// was loaded.
#[derive(Debug, Clone)]
pub struct Graph {
    triples: Vec<Triple>,
    prefixes: PrefixMap,
    by_subject: HashMap<Term, Vec<u32>>,
    by_predicate: HashMap<Term, Vec<u32>>,
    by_object: HashMap<Term, Vec<u32>>,
    by_predicate_object: HashMap<(Term, Term), Vec<u32>>,
}

impl Default for Graph {
    fn default() -> Self {
        Graph::from_sorted(Vec::new(), PrefixMap::default())
    }
}

/// Graphs compare by their triple sets; prefix declarations are presentation only.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.triples == other.triples
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn empty(prefixes: PrefixMap) -> Self {
        Graph::from_sorted(Vec::new(), prefixes)
    }

    pub fn from_triples(triples: impl IntoIterator<Item = Triple>, prefixes: PrefixMap) -> Self {
        let set: BTreeSet<Triple> = triples.into_iter().collect();
        Graph::from_sorted(set.into_iter().collect(), prefixes)
    }

    fn from_sorted(triples: Vec<Triple>, prefixes: PrefixMap) -> Self {
        let mut by_subject: HashMap<Term, Vec<u32>> = HashMap::new();
        let mut by_predicate: HashMap<Term, Vec<u32>> = HashMap::new();
        let mut by_object: HashMap<Term, Vec<u32>> = HashMap::new();
        let mut by_predicate_object: HashMap<(Term, Term), Vec<u32>> = HashMap::new();
        for (i, t) in triples.iter().enumerate() {
            let i = i as u32;
            by_subject.entry(t.subject.clone()).or_default().push(i);
            by_predicate.entry(t.predicate.clone()).or_default().push(i);
            by_object.entry(t.object.clone()).or_default().push(i);
            by_predicate_object
                .entry((t.predicate.clone(), t.object.clone()))
                .or_default()
                .push(i);
        }
        Graph { triples, prefixes, by_subject, by_predicate, by_object, by_predicate_object }
    }

    /// A builder seeded with this graph's triples and prefixes.
    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            triples: self.triples.iter().cloned().collect(),
            prefixes: self.prefixes.clone(),
        }
    }

    /// A new graph holding this graph's triples plus `extra`.
    pub fn with_triples(&self, extra: impl IntoIterator<Item = Triple>) -> Graph {
        let mut builder = self.to_builder();
        builder.extend(extra);
        builder.freeze()
    }

    pub fn prefixes(&self) -> &PrefixMap {
        &self.prefixes
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.binary_search(triple).is_ok()
    }

    /// All triples agreeing with every bound position, in sorted order.
    pub fn match_pattern<'a>(
        &'a self,
        subject: Option<&Term>,
        predicate: Option<&Term>,
        object: Option<&Term>,
    ) -> Vec<&'a Triple> {
        let candidates: Box<dyn Iterator<Item = &Triple> + '_> =
            match (subject, predicate, object) {
                (Some(s), Some(p), Some(o)) => {
                    let t = Triple { subject: s.clone(), predicate: p.clone(), object: o.clone() };
                    return match self.triples.binary_search(&t) {
                        Ok(i) => vec![&self.triples[i]],
                        Err(_) => Vec::new(),
                    };
                }
                (Some(s), _, _) => self.indexed(self.by_subject.get(s)),
                (None, Some(p), Some(o)) => {
                    self.indexed(self.by_predicate_object.get(&(p.clone(), o.clone())))
                }
                (None, None, Some(o)) => self.indexed(self.by_object.get(o)),
                (None, Some(p), None) => self.indexed(self.by_predicate.get(p)),
                (None, None, None) => Box::new(self.triples.iter()),
            };
        candidates
            .filter(|t| {
                subject.is_none_or(|s| &t.subject == s)
                    && predicate.is_none_or(|p| &t.predicate == p)
                    && object.is_none_or(|o| &t.object == o)
            })
            .collect()
    }

    fn indexed<'a>(&'a self, positions: Option<&'a Vec<u32>>) -> Box<dyn Iterator<Item = &'a Triple> + 'a> {
        match positions {
            Some(ps) => Box::new(ps.iter().map(move |&i| &self.triples[i as usize])),
            None => Box::new(std::iter::empty()),
        }
    }

    /// Objects of `subject predicate ?o`, sorted.
    pub fn objects<'a>(&'a self, subject: &Term, predicate: &Iri) -> impl Iterator<Item = &'a Term> + 'a {
        let p = Term::Iri(predicate.clone());
        self.match_pattern(Some(subject), Some(&p), None).into_iter().map(|t| &t.object)
    }

    /// Subjects of `?s predicate object`, sorted.
    pub fn subjects<'a>(&'a self, predicate: &Iri, object: &Term) -> impl Iterator<Item = &'a Term> + 'a {
        let p = Term::Iri(predicate.clone());
        self.match_pattern(None, Some(&p), Some(object)).into_iter().map(|t| &t.subject)
    }

    /// The single object of `subject predicate ?o`, or `None` when there are zero or
    /// several.
    pub fn object<'a>(&'a self, subject: &Term, predicate: &Iri) -> Option<&'a Term> {
        let mut it = self.objects(subject, predicate);
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }

    /// Asserted `rdf:type` values of `subject`.
    pub fn types<'a>(&'a self, subject: &Term) -> impl Iterator<Item = &'a Iri> + 'a {
        self.objects(subject, &rdf::type_()).filter_map(Term::as_iri)
    }

    /// Every distinct subject, sorted.
    pub fn subject_terms(&self) -> Vec<&Term> {
        let mut out: Vec<&Term> = Vec::new();
        for t in &self.triples {
            if out.last() != Some(&&t.subject) {
                out.push(&t.subject);
            }
        }
        out
    }

    /// A term in its shortest readable form under this graph's prefixes.
    pub fn display(&self, term: &Term) -> String {
        match term {
            Term::Iri(iri) => self.prefixes.display(iri),
            other => other.to_string(),
        }
    }

    /// Convenience for tests and tooling: the literal objects of a subject/predicate.
    pub fn literals<'a>(&'a self, subject: &Term, predicate: &Iri) -> impl Iterator<Item = &'a Literal> + 'a {
        self.objects(subject, predicate).filter_map(Term::as_literal)
    }
}
