use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::store::Iri;

use super::expr::{Filler, Restriction};
use super::OntologyError;

/// Classification rules that are not expressible as a single property restriction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BuildingRule {
    /// More than half of the floor area is in residential use.
    ResidentialFloorArea,
    /// Owned by a government organization.
    GovernmentOwned,
}

impl BuildingRule {
    pub fn description(self) -> &'static str {
        match self {
            BuildingRule::ResidentialFloorArea => {
                "residential floor area / total floor area > 0.5 (gcibo:hasResFloorArea / gcibo:hasFloorArea)"
            }
            BuildingRule::GovernmentOwned => "org:has_Ownership value is an org:GovernmentOrganization",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SchemaBuilder {
    classes: BTreeSet<Iri>,
    subclass_axioms: BTreeSet<(Iri, Iri)>,
    restrictions: BTreeMap<Iri, Vec<Restriction>>,
    rules: BTreeMap<Iri, BuildingRule>,
    variables: BTreeMap<Iri, (String, Vec<Iri>)>,
}

impl SchemaBuilder {
    pub fn class(&mut self, class: Iri) -> &mut Self {
        self.classes.insert(class);
        self
    }

    pub fn subclass(&mut self, child: Iri, parent: Iri) -> &mut Self {
        self.classes.insert(child.clone());
        self.classes.insert(parent.clone());
        self.subclass_axioms.insert((child, parent));
        self
    }

    pub fn restrict(&mut self, class: Iri, restriction: Restriction) -> &mut Self {
        self.classes.insert(class.clone());
        let list = self.restrictions.entry(class).or_default();
        if !list.contains(&restriction) {
            list.push(restriction);
        }
        self
    }

    pub fn rule(&mut self, class: Iri, rule: BuildingRule) -> &mut Self {
        self.classes.insert(class.clone());
        self.rules.insert(class, rule);
        self
    }

    /// Registers a `gs:Variable` with its name and the property path it reads.
    pub fn variable(&mut self, variable: Iri, name: &str, path: Vec<Iri>) -> &mut Self {
        self.variables.insert(variable, (name.to_string(), path));
        self
    }

    pub fn build(self) -> Result<Schema, OntologyError> {
        let mut parents: HashMap<Iri, Vec<Iri>> = HashMap::new();
        let mut children: HashMap<Iri, Vec<Iri>> = HashMap::new();
        for (c, p) in &self.subclass_axioms {
            parents.entry(c.clone()).or_default().push(p.clone());
            children.entry(p.clone()).or_default().push(c.clone());
        }
        let schema = Schema {
            classes: self.classes,
            subclass_axioms: self.subclass_axioms,
            parents,
            children,
            restrictions: self.restrictions,
            rules: self.rules,
            variables: self.variables,
        };
        schema.check_acyclic()?;
        Ok(schema)
    }
}

/// The encoded ontology. Immutable once built.
#[derive(Debug, Clone)]
pub struct Schema {
    classes: BTreeSet<Iri>,
    subclass_axioms: BTreeSet<(Iri, Iri)>,
    parents: HashMap<Iri, Vec<Iri>>,
    children: HashMap<Iri, Vec<Iri>>,
    restrictions: BTreeMap<Iri, Vec<Restriction>>,
    rules: BTreeMap<Iri, BuildingRule>,
    variables: BTreeMap<Iri, (String, Vec<Iri>)>,
}

impl Schema {
    fn check_acyclic(&self) -> Result<(), OntologyError> {
        // Kahn's algorithm: whatever never reaches in-degree zero sits on a cycle.
        let mut indegree: HashMap<&Iri, usize> = self.classes.iter().map(|c| (c, 0)).collect();
        for (c, _) in &self.subclass_axioms {
            *indegree.get_mut(c).unwrap() += 1;
        }
        let mut ready: Vec<&Iri> = indegree.iter().filter(|(_, &d)| d == 0).map(|(c, _)| *c).collect();
        let mut seen = 0;
        while let Some(p) = ready.pop() {
            seen += 1;
            for c in self.children.get(p).into_iter().flatten() {
                let d = indegree.get_mut(c).unwrap();
                *d -= 1;
                if *d == 0 {
                    ready.push(c);
                }
            }
        }
        if seen == self.classes.len() {
            return Ok(());
        }
        let stuck = indegree.into_iter().filter(|(_, d)| *d > 0).map(|(c, _)| c).min().unwrap();
        Err(OntologyError::Cycle(stuck.as_str().to_string()))
    }

    pub fn contains_class(&self, class: &Iri) -> bool {
        self.classes.contains(class)
    }

    pub fn classes(&self) -> impl Iterator<Item = &Iri> {
        self.classes.iter()
    }

    /// `(child, parent)` pairs, sorted.
    pub fn subclass_axioms(&self) -> impl Iterator<Item = &(Iri, Iri)> {
        self.subclass_axioms.iter()
    }

    pub fn direct_parents(&self, class: &Iri) -> &[Iri] {
        self.parents.get(class).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn direct_children(&self, class: &Iri) -> &[Iri] {
        self.children.get(class).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `class` and every class below it.
    pub fn subclass_closure(&self, class: &Iri) -> Result<BTreeSet<Iri>, OntologyError> {
        if !self.contains_class(class) {
            return Err(OntologyError::UnknownClass(class.as_str().to_string()));
        }
        Ok(self.walk(class, |c| self.direct_children(c)))
    }

    /// `class` and every class above it. Unknown classes have only themselves.
    pub fn superclasses(&self, class: &Iri) -> BTreeSet<Iri> {
        self.walk(class, |c| self.direct_parents(c))
    }

    pub fn is_subclass_of(&self, child: &Iri, parent: &Iri) -> bool {
        child == parent || self.superclasses(child).contains(parent)
    }

    fn walk<'a>(&'a self, start: &Iri, next: impl Fn(&Iri) -> &'a [Iri]) -> BTreeSet<Iri> {
        let mut out = BTreeSet::new();
        let mut stack = vec![start.clone()];
        while let Some(c) = stack.pop() {
            if out.insert(c.clone()) {
                stack.extend(next(&c).iter().cloned());
            }
        }
        out
    }

    /// Restrictions stated directly on `class`.
    pub fn restrictions_on(&self, class: &Iri) -> &[Restriction] {
        self.restrictions.get(class).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Every class that carries restrictions, with them.
    pub fn all_restrictions(&self) -> impl Iterator<Item = (&Iri, &[Restriction])> {
        self.restrictions.iter().map(|(c, rs)| (c, rs.as_slice()))
    }

    /// Restrictions that apply to instances of `class`: its own plus inherited ones.
    ///
    /// An inherited restriction is dropped when a more specific class in the hierarchy
    /// restricts the same property with the same kind (`ElectricalServiceAccount`'s
    /// `hasServiceType only ElectricalService` replaces `ServiceAccount`'s
    /// `hasServiceType only Service`). Results are ordered by owning class.
    pub fn effective_restrictions(&self, class: &Iri) -> Vec<(&Iri, &Restriction)> {
        let supers = self.superclasses(class);
        let mut out = Vec::new();
        for (owner, restrictions) in supers.iter().filter_map(|c| self.restrictions.get_key_value(c)) {
            for r in restrictions {
                let shadowed = supers.iter().any(|other| {
                    other != owner
                        && self.is_subclass_of(other, owner)
                        && self
                            .restrictions_on(other)
                            .iter()
                            .any(|o| o.property == r.property && o.kind == r.kind)
                });
                if !shadowed {
                    out.push((owner, r));
                }
            }
        }
        out
    }

    pub fn rule(&self, class: &Iri) -> Option<BuildingRule> {
        self.rules.get(class).copied()
    }

    pub fn rules(&self) -> impl Iterator<Item = (&Iri, BuildingRule)> {
        self.rules.iter().map(|(c, r)| (c, *r))
    }

    /// Name and property path of a registered `gs:Variable`.
    pub fn variable(&self, variable: &Iri) -> Option<(&str, &[Iri])> {
        self.variables.get(variable).map(|(n, p)| (n.as_str(), p.as_slice()))
    }

    pub fn variables(&self) -> impl Iterator<Item = (&Iri, &str, &[Iri])> {
        self.variables.iter().map(|(v, (n, p))| (v, n.as_str(), p.as_slice()))
    }

    /// Named classes used in restriction fillers that the schema does not define;
    /// these are external vocabulary terms.
    pub fn external_filler_classes(&self) -> BTreeSet<&Iri> {
        self.restrictions
            .values()
            .flatten()
            .filter_map(|r| match &r.filler {
                Filler::Class(e) => Some(e.named_classes()),
                _ => None,
            })
            .flatten()
            .filter(|c| !self.classes.contains(*c))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(s: &str) -> Iri {
        Iri::new(format!("http://x/{s}")).unwrap()
    }

    #[test]
    fn cycles_are_rejected() {
        let mut b = SchemaBuilder::default();
        b.subclass(iri("a"), iri("b")).subclass(iri("b"), iri("c")).subclass(iri("c"), iri("a"));
        assert!(matches!(b.build(), Err(OntologyError::Cycle(_))));
    }

    #[test]
    fn closure_is_reflexive_and_transitive() {
        let mut b = SchemaBuilder::default();
        b.subclass(iri("b"), iri("a")).subclass(iri("c"), iri("b")).class(iri("leaf"));
        let s = b.build().unwrap();
        assert_eq!(s.subclass_closure(&iri("a")).unwrap(), [iri("a"), iri("b"), iri("c")].into());
        assert_eq!(s.subclass_closure(&iri("leaf")).unwrap(), [iri("leaf")].into());
        assert!(s.subclass_closure(&iri("nope")).is_err());
        assert!(s.is_subclass_of(&iri("c"), &iri("a")));
    }
}
