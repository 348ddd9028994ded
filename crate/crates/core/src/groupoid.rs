//! Finite discrete groupoids with explicit composition tables.
//!
//! A finite discrete groupoid is the combinatorial core of a finite ample
//! Hausdorff groupoid: a finite set of named morphisms, a distinguished
//! subset of units, source/range maps into the units, an involution, and a
//! partial composition defined exactly on pairs `(a, b)` with
//! `src(a) = rng(b)` (so `comp(a, b)` means "b first, then a").
//!
//! The composition table is stored explicitly rather than derived;
//! [`FiniteGroupoid::validate`] checks every groupoid axiom directly and
//! reports each violation with a witness, and is the single source of trust
//! for validity. Construction only rejects structurally unrepresentable
//! input (unknown names, a source that is not a unit, size over budget).
//!
//! A set of units is *invariant* when no morphism crosses its boundary;
//! invariant sets are exactly the unions of [`FiniteGroupoid::orbits`], and
//! for the convolution algebras built in [`crate::algebra`] they play the
//! role that saturated hereditary vertex sets play for graph algebras.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

/// Hard cap on the number of morphisms a groupoid may carry.
pub const MAX_MORPHISMS: usize = 4096;

/// Hard cap on the number of orbits for invariant-set enumeration.
pub const MAX_ORBITS: usize = 20;

/// A set of units of a particular groupoid, stored as sorted unit indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct UnitSet(BTreeSet<usize>);

impl UnitSet {
    /// The empty set.
    pub fn empty() -> Self {
        UnitSet(BTreeSet::new())
    }

    /// Builds a set from unit indices.
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        UnitSet(indices.into_iter().collect())
    }

    /// Whether `u` is a member.
    pub fn contains(&self, u: usize) -> bool {
        self.0.contains(&u)
    }

    /// Inserts a unit index.
    pub fn insert(&mut self, u: usize) -> bool {
        self.0.insert(u)
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether the set is empty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Set union.
    pub fn union(&self, other: &UnitSet) -> UnitSet {
        UnitSet(self.0.union(&other.0).copied().collect())
    }

    /// Set intersection.
    pub fn intersection(&self, other: &UnitSet) -> UnitSet {
        UnitSet(self.0.intersection(&other.0).copied().collect())
    }

    /// Whether `self` is contained in `other`.
    pub fn is_subset(&self, other: &UnitSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<usize> for UnitSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        UnitSet(iter.into_iter().collect())
    }
}

/// A non-unit morphism as supplied to [`FiniteGroupoid::new`].
#[derive(Clone, Debug)]
pub struct Arrow {
    /// Morphism name, unique across units and arrows.
    pub name: String,
    /// Name of the source unit.
    pub src: String,
    /// Name of the range unit.
    pub rng: String,
    /// Name of the inverse morphism.
    pub inv: String,
}

/// One violated groupoid axiom, with witnesses (morphism indices).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// A unit whose source, range, or inverse is not itself.
    UnitNotReflexive(usize),
    /// `inv(inv(g)) != g`.
    InverseInvolution(usize),
    /// `src(inv(g)) != rng(g)` or `rng(inv(g)) != src(g)`.
    InverseExchange(usize),
    /// `src(a) = rng(b)` but no composition entry for `(a, b)`.
    MissingComposition(usize, usize),
    /// A composition entry for a non-composable pair `(a, b)`.
    SpuriousComposition(usize, usize),
    /// `src(comp(a,b)) != src(b)` or `rng(comp(a,b)) != rng(a)`.
    CompositionEndpoints(usize, usize),
    /// `comp(g, src(g)) != g` or `comp(rng(g), g) != g`.
    IdentityLaw(usize),
    /// `comp(g, inv(g))` or `comp(inv(g), g)` is not the expected unit.
    InverseLaw(usize),
    /// `comp(comp(a,b),c) != comp(a,comp(b,c))` on a composable triple.
    Associativity(usize, usize, usize),
}

/// Outcome of [`FiniteGroupoid::validate`].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupoidReport {
    /// All violations found, in deterministic order.
    pub violations: Vec<Violation>,
}

impl GroupoidReport {
    /// Whether every axiom held.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Renders the report with morphism names substituted for indices.
    pub fn describe(&self, g: &FiniteGroupoid) -> String {
        if self.is_valid() {
            return "valid groupoid".to_string();
        }
        let n = |i: &usize| g.name(*i).to_string();
        self.violations
            .iter()
            .map(|v| match v {
                Violation::UnitNotReflexive(u) => format!("unit {} must have src = rng = inv = itself", n(u)),
                Violation::InverseInvolution(m) => format!("inv(inv({})) differs from {}", n(m), n(m)),
                Violation::InverseExchange(m) => format!("inverse of {} does not swap src and rng", n(m)),
                Violation::MissingComposition(a, b) => {
                    format!("composable pair ({}, {}) has no composition entry", n(a), n(b))
                }
                Violation::SpuriousComposition(a, b) => {
                    format!("pair ({}, {}) is not composable but has a composition entry", n(a), n(b))
                }
                Violation::CompositionEndpoints(a, b) => {
                    format!("comp({}, {}) has wrong source or range", n(a), n(b))
                }
                Violation::IdentityLaw(m) => format!("units do not act as identities on {}", n(m)),
                Violation::InverseLaw(m) => format!("comp with inverse of {} does not yield a unit", n(m)),
                Violation::Associativity(a, b, c) => {
                    format!("associativity fails on ({}, {}, {})", n(a), n(b), n(c))
                }
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Construction-time and operation-level failures.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupoidError {
    /// A referenced morphism name does not exist.
    UnknownName(String),
    /// Two morphisms share a name.
    DuplicateName(String),
    /// A source or range field names a non-unit morphism.
    NotAUnit {
        /// The morphism whose endpoint is wrong.
        morphism: String,
        /// The offending endpoint name.
        endpoint: String,
    },
    /// More than [`MAX_MORPHISMS`] morphisms.
    TooManyMorphisms(usize),
    /// More than [`MAX_ORBITS`] orbits in an invariant-set enumeration.
    TooManyOrbits(usize),
    /// A restriction was requested for a non-invariant unit set; the payload
    /// names a morphism crossing the boundary.
    NotInvariant(String),
    /// A unit index outside the unit range.
    NotAUnitIndex(usize),
    /// An operation required a valid groupoid but validation failed.
    Invalid(String),
}

impl fmt::Display for GroupoidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupoidError::UnknownName(s) => write!(f, "unknown morphism name {s:?}"),
            GroupoidError::DuplicateName(s) => write!(f, "duplicate morphism name {s:?}"),
            GroupoidError::NotAUnit { morphism, endpoint } => {
                write!(f, "morphism {morphism:?} has endpoint {endpoint:?} which is not a unit")
            }
            GroupoidError::TooManyMorphisms(k) => {
                write!(f, "{k} morphisms exceed the supported maximum of {MAX_MORPHISMS}")
            }
            GroupoidError::TooManyOrbits(k) => {
                write!(f, "{k} orbits exceed the invariant-set enumeration budget of {MAX_ORBITS}")
            }
            GroupoidError::NotInvariant(m) => {
                write!(f, "unit set is not invariant: morphism {m:?} crosses its boundary")
            }
            GroupoidError::NotAUnitIndex(u) => write!(f, "index {u} is not a unit"),
            GroupoidError::Invalid(msg) => write!(f, "groupoid fails validation: {msg}"),
        }
    }
}

impl core::error::Error for GroupoidError {}

/// A finite discrete groupoid. See the module docs for conventions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroupoid {
    /// Morphism names; indices `0..n_units` are the units.
    names: Vec<String>,
    n_units: usize,
    src: Vec<usize>,
    rng: Vec<usize>,
    inv: Vec<usize>,
    comp: BTreeMap<(usize, usize), usize>,
}

impl FiniteGroupoid {
    /// Builds a groupoid from unit names, arrows, and an explicit
    /// composition table given as `(a, b, comp(a, b))` name triples.
    ///
    /// Compositions involving a unit are filled in automatically (units
    /// compose as identities); explicit entries override nothing — a
    /// conflicting entry surfaces later as a validation violation.
    pub fn new(
        units: Vec<String>,
        arrows: Vec<Arrow>,
        compositions: Vec<(String, String, String)>,
    ) -> Result<Self, GroupoidError> {
        let total = units.len() + arrows.len();
        if total > MAX_MORPHISMS {
            return Err(GroupoidError::TooManyMorphisms(total));
        }
        let mut names = units;
        names.extend(arrows.iter().map(|a| a.name.clone()));
        let mut index = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(GroupoidError::DuplicateName(name.clone()));
            }
        }
        let n_units = names.len() - arrows.len();
        let resolve = |name: &str| index.get(name).copied().ok_or_else(|| GroupoidError::UnknownName(name.to_string()));

        let mut src: Vec<usize> = (0..n_units).collect();
        let mut rng = src.clone();
        let mut inv = src.clone();
        for arrow in &arrows {
            let s = resolve(&arrow.src)?;
            let r = resolve(&arrow.rng)?;
            for (endpoint, value) in [(&arrow.src, s), (&arrow.rng, r)] {
                if value >= n_units {
                    return Err(GroupoidError::NotAUnit {
                        morphism: arrow.name.clone(),
                        endpoint: endpoint.clone(),
                    });
                }
            }
            src.push(s);
            rng.push(r);
            inv.push(resolve(&arrow.inv)?);
        }

        let mut comp = BTreeMap::new();
        for (a, b, ab) in &compositions {
            comp.insert((resolve(a)?, resolve(b)?), resolve(ab)?);
        }
        // Units compose as identities wherever no explicit entry was given.
        for m in 0..names.len() {
            comp.entry((m, src[m])).or_insert(m);
            comp.entry((rng[m], m)).or_insert(m);
        }
        Ok(FiniteGroupoid { names, n_units, src, rng, inv, comp })
    }

    /// Number of morphisms, units included.
    pub fn morphism_count(&self) -> usize {
        self.names.len()
    }

    /// Number of units.
    pub fn unit_count(&self) -> usize {
        self.n_units
    }

    /// Whether morphism `m` is a unit.
    pub fn is_unit(&self, m: usize) -> bool {
        m < self.n_units
    }

    /// Name of morphism `m`.
    pub fn name(&self, m: usize) -> &str {
        &self.names[m]
    }

    /// Index of the morphism named `name`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Source unit of `m`.
    pub fn source(&self, m: usize) -> usize {
        self.src[m]
    }

    /// Range unit of `m`.
    pub fn range(&self, m: usize) -> usize {
        self.rng[m]
    }

    /// Inverse of `m`.
    pub fn inverse(&self, m: usize) -> usize {
        self.inv[m]
    }

    /// `comp(a, b)` if an entry exists.
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.comp.get(&(a, b)).copied()
    }

    /// The full unit set.
    pub fn full_unit_set(&self) -> UnitSet {
        (0..self.n_units).collect()
    }

    /// Checks every groupoid axiom and reports all violations.
    pub fn validate(&self) -> GroupoidReport {
        let mut violations = Vec::new();
        let n = self.names.len();
        for u in 0..self.n_units {
            if self.src[u] != u || self.rng[u] != u || self.inv[u] != u {
                violations.push(Violation::UnitNotReflexive(u));
            }
        }
        for m in 0..n {
            if self.inv[self.inv[m]] != m {
                violations.push(Violation::InverseInvolution(m));
            }
            if self.src[self.inv[m]] != self.rng[m] || self.rng[self.inv[m]] != self.src[m] {
                violations.push(Violation::InverseExchange(m));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let composable = self.src[a] == self.rng[b];
                match self.comp.get(&(a, b)) {
                    None if composable => violations.push(Violation::MissingComposition(a, b)),
                    Some(_) if !composable => violations.push(Violation::SpuriousComposition(a, b)),
                    Some(&ab)
                        if composable
                            && (self.src[ab] != self.src[b] || self.rng[ab] != self.rng[a]) =>
                    {
                        violations.push(Violation::CompositionEndpoints(a, b));
                    }
                    _ => {}
                }
            }
        }
        for m in 0..n {
            if self.comp.get(&(m, self.src[m])) != Some(&m) || self.comp.get(&(self.rng[m], m)) != Some(&m) {
                violations.push(Violation::IdentityLaw(m));
            }
            if self.comp.get(&(m, self.inv[m])) != Some(&self.rng[m])
                || self.comp.get(&(self.inv[m], m)) != Some(&self.src[m])
            {
                violations.push(Violation::InverseLaw(m));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.src[a] != self.rng[b] {
                    continue;
                }
                for c in 0..n {
                    if self.src[b] != self.rng[c] {
                        continue;
                    }
                    let left = self.comp.get(&(a, b)).and_then(|&ab| self.comp.get(&(ab, c)));
                    let right = self.comp.get(&(b, c)).and_then(|&bc| self.comp.get(&(a, bc)));
                    if let (Some(&l), Some(&r)) = (left, right) {
                        if l != r {
                            violations.push(Violation::Associativity(a, b, c));
                        }
                    }
                }
            }
        }
        GroupoidReport { violations }
    }

    /// Validates and wraps failures into an error.
    pub fn require_valid(&self) -> Result<(), GroupoidError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(GroupoidError::Invalid(report.describe(self)))
        }
    }

    /// Orbits of the unit space: `u ~ v` iff some morphism has source `u`
    /// and range `v`. Returned sorted by smallest member.
    pub fn orbits(&self) -> Vec<UnitSet> {
        let mut seen = vec![false; self.n_units];
        let mut orbits = Vec::new();
        for start in 0..self.n_units {
            if seen[start] {
                continue;
            }
            let mut orbit = UnitSet::empty();
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(u) = queue.pop() {
                orbit.insert(u);
                for m in 0..self.names.len() {
                    if self.src[m] != u && self.rng[m] != u {
                        continue;
                    }
                    for v in [self.src[m], self.rng[m]] {
                        if !seen[v] {
                            seen[v] = true;
                            queue.push(v);
                        }
                    }
                }
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Smallest invariant set of units containing `v`: the union of all
    /// orbits meeting `v`.
    pub fn invariant_closure(&self, v: &UnitSet) -> UnitSet {
        self.orbits()
            .into_iter()
            .filter(|orbit| orbit.iter().any(|u| v.contains(u)))
            .fold(UnitSet::empty(), |acc, orbit| acc.union(&orbit))
    }

    /// Whether no morphism crosses the boundary of `v`.
    pub fn is_invariant(&self, v: &UnitSet) -> bool {
        (0..self.names.len()).all(|m| v.contains(self.src[m]) == v.contains(self.rng[m]))
    }

    /// All invariant (open) sets of units: every union of orbits, the empty
    /// set included, in a deterministic order. Errors beyond [`MAX_ORBITS`]
    /// orbits.
    pub fn invariant_open_sets(&self) -> Result<Vec<UnitSet>, GroupoidError> {
        let orbits = self.orbits();
        if orbits.len() > MAX_ORBITS {
            return Err(GroupoidError::TooManyOrbits(orbits.len()));
        }
        let mut sets = Vec::with_capacity(1 << orbits.len());
        for mask in 0u32..(1 << orbits.len()) {
            let mut set = UnitSet::empty();
            for (i, orbit) in orbits.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    set = set.union(orbit);
                }
            }
            sets.push(set);
        }
        sets.sort();
        sets.dedup();
        Ok(sets)
    }

    /// Morphisms with equal source and range (the isotropy bundle).
    pub fn isotropy(&self) -> Vec<usize> {
        (0..self.names.len()).filter(|&m| self.src[m] == self.rng[m]).collect()
    }

    /// Whether the isotropy consists of units only (for a discrete groupoid
    /// this is effectiveness, i.e. principality).
    pub fn is_effective(&self) -> bool {
        self.isotropy().into_iter().all(|m| self.is_unit(m))
    }

    /// Whether every restriction to a nonempty invariant unit set is
    /// effective, checked by the literal loop over all such sets.
    pub fn is_strongly_effective(&self) -> Result<bool, GroupoidError> {
        for v in self.invariant_open_sets()? {
            if v.is_empty() {
                continue;
            }
            if !self.restrict(&v)?.is_effective() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The restriction to an invariant unit set `v`: all morphisms whose
    /// source (equivalently range) lies in `v`. Errors if `v` is not
    /// invariant, naming a crossing morphism; the result is re-validated.
    pub fn restrict(&self, v: &UnitSet) -> Result<FiniteGroupoid, GroupoidError> {
        for u in v.iter() {
            if u >= self.n_units {
                return Err(GroupoidError::NotAUnitIndex(u));
            }
        }
        if let Some(m) = (0..self.names.len()).find(|&m| v.contains(self.src[m]) != v.contains(self.rng[m])) {
            return Err(GroupoidError::NotInvariant(self.names[m].clone()));
        }
        let keep: Vec<usize> = (0..self.names.len()).filter(|&m| v.contains(self.src[m])).collect();
        let old_to_new: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let restricted = FiniteGroupoid {
            names: keep.iter().map(|&m| self.names[m].clone()).collect(),
            n_units: v.len(),
            src: keep.iter().map(|&m| old_to_new[&self.src[m]]).collect(),
            rng: keep.iter().map(|&m| old_to_new[&self.rng[m]]).collect(),
            inv: keep.iter().map(|&m| old_to_new[&self.inv[m]]).collect(),
            comp: self
                .comp
                .iter()
                .filter(|((a, b), _)| old_to_new.contains_key(a) && old_to_new.contains_key(b))
                .map(|((a, b), ab)| ((old_to_new[a], old_to_new[b]), old_to_new[ab]))
                .collect(),
        };
        restricted.require_valid()?;
        Ok(restricted)
    }

    /// Renders a unit set with names, e.g. `{u, v}`.
    pub fn render_unit_set(&self, v: &UnitSet) -> String {
        let names: Vec<&str> = v.iter().map(|u| self.name(u)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn unit_restriction_ordering_invariant() {
        // Restricting keeps units first: the restriction of a valid groupoid
        // lists its surviving units before its surviving arrows.
        let g = catalog::two_units_one_orbit();
        let v = g.full_unit_set();
        let r = g.restrict(&v).unwrap();
        assert_eq!(r.morphism_count(), g.morphism_count());
        assert!(r.validate().is_valid());
    }

    #[test]
    fn catalog_members_validate() {
        for (name, g) in catalog::all_groupoids() {
            assert!(g.validate().is_valid(), "{name} failed validation");
        }
    }

    #[test]
    fn broken_associativity_is_reported() {
        // Take the 2-element group and corrupt g·g from e to g.
        let g = FiniteGroupoid::new(
            vec!["e".into()],
            vec![Arrow { name: "g".into(), src: "e".into(), rng: "e".into(), inv: "g".into() }],
            vec![("g".into(), "g".into(), "g".into())],
        )
        .unwrap();
        let report = g.validate();
        assert!(!report.is_valid());
        // g·g = g breaks the inverse law (g paired with its inverse must give a unit).
        assert!(report.violations.contains(&Violation::InverseLaw(1)), "{report:?}");
    }

    #[test]
    fn missing_composition_is_reported() {
        let g = FiniteGroupoid::new(
            vec!["u".into()],
            vec![
                Arrow { name: "a".into(), src: "u".into(), rng: "u".into(), inv: "b".into() },
                Arrow { name: "b".into(), src: "u".into(), rng: "u".into(), inv: "a".into() },
            ],
            vec![
                ("a".into(), "b".into(), "u".into()),
                ("b".into(), "a".into(), "u".into()),
                ("a".into(), "a".into(), "b".into()),
                // (b, b) deliberately missing
            ],
        )
        .unwrap();
        let report = g.validate();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::MissingComposition(_, _))));
    }

    #[test]
    fn orbits_of_catalog_members() {
        assert_eq!(catalog::trivial().orbits().len(), 1);
        assert_eq!(catalog::discrete(3).orbits().len(), 3);
        assert_eq!(catalog::two_units_one_orbit().orbits().len(), 1);
        let g = catalog::pair_orbit_plus_point();
        assert_eq!(g.orbits().len(), 2);
    }

    #[test]
    fn invariant_sets_are_orbit_unions() {
        let g = catalog::pair_orbit_plus_point();
        let sets = g.invariant_open_sets().unwrap();
        assert_eq!(sets.len(), 4); // 2 orbits -> 4 unions
        for v in &sets {
            assert!(g.is_invariant(v));
        }
        // Closure of a half-orbit is the full orbit.
        let half = UnitSet::from_indices([0]);
        let closure = g.invariant_closure(&half);
        assert_eq!(closure.len(), 2);
    }

    #[test]
    fn effectiveness() {
        assert!(catalog::discrete(2).is_effective());
        assert!(catalog::two_units_one_orbit().is_effective());
        assert!(!catalog::cyclic_group(2).is_effective());
        assert!(catalog::two_units_one_orbit().is_strongly_effective().unwrap());
        assert!(!catalog::cyclic_group(2).is_strongly_effective().unwrap());
    }

    #[test]
    fn restriction_to_non_invariant_set_fails() {
        let g = catalog::two_units_one_orbit();
        let half = UnitSet::from_indices([0]);
        match g.restrict(&half) {
            Err(GroupoidError::NotInvariant(name)) => {
                assert!(g.index_of(&name).is_some());
            }
            other => panic!("expected NotInvariant, got {other:?}"),
        }
    }

    #[test]
    fn restriction_to_orbit_is_valid() {
        let g = catalog::pair_orbit_plus_point();
        let orbits = g.orbits();
        for orbit in orbits {
            let r = g.restrict(&orbit).unwrap();
            assert!(r.validate().is_valid());
            assert_eq!(r.unit_count(), orbit.len());
        }
    }
}
