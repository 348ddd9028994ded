//! The convolution algebra of a finite discrete groupoid over a finite
//! coefficient ring, and its two-sided ideal theory.
//!
//! Elements are coefficient vectors indexed by morphisms; multiplication is
//! convolution over the composition table. Ideals are kept as canonical
//! module bases per ring factor, so equality and membership are syntactic.
//! On top of the arithmetic this module provides exhaustive ideal
//! enumeration (the brute-force oracle), ideals of invariant open unit
//! sets, the restriction/extension exact sequence, the kernel of the
//! unit-space representation, and the two-way translation between ideals
//! and order-reversing ideal-valued functions on invariant open sets.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::groupoid::{FiniteGroupoid, GroupoidError, UnitSet};
use crate::howell::{apply_map, left_kernel, ModBasis};
use crate::pi::{CarrierKind, CarrierLattice, PiError, PiFunction};
use crate::ring::{divisors, RIdeal, RingElement, RingError, RingSpec};

/// Enumeration refuses groupoids with more morphisms than this.
pub const MAX_ENUMERATION_MORPHISMS: usize = 64;

/// Enumeration refuses coefficient rings larger than this.
pub const MAX_ENUMERATION_RING: u128 = 16;

/// Cap on `morphisms * ceil(log2 |R|)`, i.e. on `log2` of the number of
/// candidate generators enumeration must sweep.
pub const MAX_ENUMERATION_WEIGHT: u32 = 20;

/// Errors from algebra construction and ideal computations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AlgebraError {
    /// A coefficient-ring operation failed.
    Ring(RingError),
    /// The underlying groupoid is invalid or was used incorrectly.
    Groupoid(GroupoidError),
    /// A lattice-function operation failed.
    Pi(PiError),
    /// The coefficient ring is infinite.
    InfiniteRing,
    /// An indicator was requested for a set that is not a bisection.
    NotABisection {
        /// Which map collides: `"source"` or `"range"`.
        role: &'static str,
        /// Name of the first colliding morphism.
        first: String,
        /// Name of the second colliding morphism.
        second: String,
    },
    /// An enumeration would exceed the configured budget.
    EnumerationBudget(String),
    /// An argument does not belong to this algebra.
    WrongShape(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::Ring(e) => write!(f, "{e}"),
            AlgebraError::Groupoid(e) => write!(f, "{e}"),
            AlgebraError::Pi(e) => write!(f, "{e}"),
            AlgebraError::InfiniteRing => {
                write!(f, "finite rings only: ideal computations need a finite coefficient ring")
            }
            AlgebraError::NotABisection { role, first, second } => {
                write!(f, "not a bisection: morphisms {first:?} and {second:?} share a {role}")
            }
            AlgebraError::EnumerationBudget(msg) => write!(f, "enumeration budget exceeded: {msg}"),
            AlgebraError::WrongShape(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for AlgebraError {}

impl From<RingError> for AlgebraError {
    fn from(e: RingError) -> Self {
        AlgebraError::Ring(e)
    }
}

impl From<GroupoidError> for AlgebraError {
    fn from(e: GroupoidError) -> Self {
        AlgebraError::Groupoid(e)
    }
}

impl From<PiError> for AlgebraError {
    fn from(e: PiError) -> Self {
        AlgebraError::Pi(e)
    }
}

/// An element of the convolution algebra: one residue row per ring factor,
/// indexed by morphism. Rows always have full length, so the zero element
/// and missing support look the same.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct AlgebraElement {
    data: Vec<Vec<u64>>,
}

impl AlgebraElement {
    /// Whether every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|row| row.iter().all(|&x| x == 0))
    }
}

/// A two-sided ideal, stored as one canonical module basis per ring factor.
///
/// Every constructor on [`SteinbergAlgebra`] returns bases that are closed
/// under left and right convolution by all singleton indicators, so values
/// of this type really are ideals, and equality of ideals is equality of
/// canonical bases.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct AlgebraIdeal {
    factors: Vec<ModBasis>,
}

impl AlgebraIdeal {
    /// The canonical module basis of each ring factor.
    pub fn factors(&self) -> &[ModBasis] {
        &self.factors
    }

    /// Whether this is the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.factors.iter().all(ModBasis::is_zero)
    }

    /// Number of elements in the ideal.
    pub fn element_count(&self) -> u128 {
        self.factors.iter().map(ModBasis::element_count).product()
    }
}

/// Outcome of checking the restriction/extension exact sequence at an
/// invariant open set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactnessReport {
    /// The extension map from the sub-algebra is injective.
    pub i_injective: bool,
    /// The restriction map onto the complement's algebra is surjective.
    pub q_surjective: bool,
    /// The image of the extension map equals the open-support ideal.
    pub image_matches: bool,
    /// The kernel of the restriction map equals the open-support ideal.
    pub kernel_matches: bool,
    /// Human-readable description of each failure, empty when exact.
    pub failures: Vec<String>,
}

impl ExactnessReport {
    /// Whether the sequence is exact.
    pub fn is_exact(&self) -> bool {
        self.failures.is_empty()
    }
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn ceil_log2(x: u128) -> u32 {
    if x <= 1 {
        0
    } else {
        128 - (x - 1).leading_zeros()
    }
}

/// The convolution algebra of a validated finite groupoid over a finite
/// coefficient ring. Owns the precomputed composition fan-out used by all
/// ideal closures.
pub struct SteinbergAlgebra<'g> {
    groupoid: &'g FiniteGroupoid,
    ring: RingSpec,
    moduli: Vec<u64>,
    /// All composable pairs `(a, b, ab)`.
    pairs: Vec<(usize, usize, usize)>,
    /// `left_by[s]` lists `(b, s·b)` for every `b` composable under `s`.
    left_by: Vec<Vec<(usize, usize)>>,
    /// `right_by[s]` lists `(a, a·s)` for every `a` composable over `s`.
    right_by: Vec<Vec<(usize, usize)>>,
}

impl<'g> SteinbergAlgebra<'g> {
    /// Builds the algebra, validating the groupoid and requiring a finite
    /// ring.
    pub fn new(groupoid: &'g FiniteGroupoid, ring: RingSpec) -> Result<Self, AlgebraError> {
        groupoid.require_valid()?;
        ring.validate()?;
        if !ring.is_finite() {
            return Err(AlgebraError::InfiniteRing);
        }
        let moduli = ring.leaf_moduli()?;
        let m = groupoid.morphism_count();
        let mut pairs = Vec::new();
        let mut left_by = vec![Vec::new(); m];
        let mut right_by = vec![Vec::new(); m];
        for (a, b) in (0..m).flat_map(|a| (0..m).map(move |b| (a, b))) {
            if let Some(ab) = groupoid.compose(a, b) {
                pairs.push((a, b, ab));
                left_by[a].push((b, ab));
                right_by[b].push((a, ab));
            }
        }
        Ok(SteinbergAlgebra { groupoid, ring, moduli, pairs, left_by, right_by })
    }

    /// The underlying groupoid.
    pub fn groupoid(&self) -> &FiniteGroupoid {
        self.groupoid
    }

    /// The coefficient ring.
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    fn morphism_count(&self) -> usize {
        self.groupoid.morphism_count()
    }

    fn check_shape(&self, x: &AlgebraElement) -> Result<(), AlgebraError> {
        let m = self.morphism_count();
        if x.data.len() != self.moduli.len() || x.data.iter().any(|row| row.len() != m) {
            return Err(AlgebraError::WrongShape(
                "element does not belong to this algebra (coefficient shape mismatch)".to_string(),
            ));
        }
        for (row, &n) in x.data.iter().zip(&self.moduli) {
            if row.iter().any(|&c| c >= n) {
                return Err(AlgebraError::WrongShape(
                    "element does not belong to this algebra (residue out of range)".to_string(),
                ));
            }
        }
        Ok(())
    }

    fn assert_shape(&self, x: &AlgebraElement) {
        assert!(self.check_shape(x).is_ok(), "element from a different algebra");
    }

    /// The zero element.
    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { data: vec![vec![0; self.morphism_count()]; self.moduli.len()] }
    }

    /// The multiplicative identity, i.e. the indicator of the unit space.
    pub fn identity(&self) -> AlgebraElement {
        let mut x = self.zero();
        for u in 0..self.groupoid.unit_count() {
            for row in &mut x.data {
                row[u] = 1;
            }
        }
        x
    }

    /// Builds an element from named coefficients; names absent from the map
    /// get coefficient zero.
    pub fn from_coeffs(
        &self,
        coeffs: &BTreeMap<String, RingElement>,
    ) -> Result<AlgebraElement, AlgebraError> {
        let mut x = self.zero();
        for (name, value) in coeffs {
            let idx = self
                .groupoid
                .index_of(name)
                .ok_or_else(|| GroupoidError::UnknownName(name.clone()))?;
            let leaves = self.ring.flatten_element(value)?;
            for (f, leaf) in leaves.into_iter().enumerate() {
                x.data[f][idx] = leaf;
            }
        }
        Ok(x)
    }

    /// The coefficient of `x` at the morphism with index `m`.
    pub fn coeff(&self, x: &AlgebraElement, m: usize) -> RingElement {
        self.assert_shape(x);
        let leaves: Vec<u64> = x.data.iter().map(|row| row[m]).collect();
        self.ring.element_from_leaves(&leaves).expect("leaf row matches the ring spec")
    }

    /// The nonzero coefficients of `x`, keyed by morphism name.
    pub fn coeffs(&self, x: &AlgebraElement) -> BTreeMap<String, RingElement> {
        self.support(x)
            .into_iter()
            .map(|m| (self.groupoid.name(m).to_string(), self.coeff(x, m)))
            .collect()
    }

    /// Indices of the morphisms where `x` is nonzero.
    pub fn support(&self, x: &AlgebraElement) -> Vec<usize> {
        self.assert_shape(x);
        (0..self.morphism_count()).filter(|&m| x.data.iter().any(|row| row[m] != 0)).collect()
    }

    /// Pointwise sum.
    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.assert_shape(a);
        self.assert_shape(b);
        let data = a
            .data
            .iter()
            .zip(&b.data)
            .zip(&self.moduli)
            .map(|((ra, rb), &n)| ra.iter().zip(rb).map(|(&x, &y)| (x + y) % n).collect())
            .collect();
        AlgebraElement { data }
    }

    /// Pointwise negation.
    pub fn neg(&self, a: &AlgebraElement) -> AlgebraElement {
        self.assert_shape(a);
        let data = a
            .data
            .iter()
            .zip(&self.moduli)
            .map(|(row, &n)| row.iter().map(|&x| (n - x) % n).collect())
            .collect();
        AlgebraElement { data }
    }

    /// Scales `a` by the ring element `r`.
    pub fn scalar_mul(
        &self,
        r: &RingElement,
        a: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.assert_shape(a);
        let leaves = self.ring.flatten_element(r)?;
        let data = a
            .data
            .iter()
            .zip(&leaves)
            .zip(&self.moduli)
            .map(|((row, &s), &n)| row.iter().map(|&x| mulmod(s, x, n)).collect())
            .collect();
        Ok(AlgebraElement { data })
    }

    /// Convolution: `(a*b)(αβ) = Σ a(α) b(β)` over composable pairs.
    pub fn convolve(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.check_shape(a)?;
        self.check_shape(b)?;
        let mut out = self.zero();
        for &(i, j, ij) in &self.pairs {
            for (f, &n) in self.moduli.iter().enumerate() {
                let t = mulmod(a.data[f][i], b.data[f][j], n);
                out.data[f][ij] = (out.data[f][ij] + t) % n;
            }
        }
        Ok(out)
    }

    /// The indicator (with coefficient 1) of a set of morphisms, which must
    /// be a bisection: no two members may share a source or a range.
    pub fn indicator(&self, morphisms: &[usize]) -> Result<AlgebraElement, AlgebraError> {
        let set: BTreeSet<usize> = morphisms.iter().copied().collect();
        for &m in &set {
            if m >= self.morphism_count() {
                return Err(AlgebraError::WrongShape(format!("morphism index {m} out of range")));
            }
        }
        let members: Vec<usize> = set.into_iter().collect();
        for (k, &a) in members.iter().enumerate() {
            for &b in &members[k + 1..] {
                let role = if self.groupoid.source(a) == self.groupoid.source(b) {
                    Some("source")
                } else if self.groupoid.range(a) == self.groupoid.range(b) {
                    Some("range")
                } else {
                    None
                };
                if let Some(role) = role {
                    return Err(AlgebraError::NotABisection {
                        role,
                        first: self.groupoid.name(a).to_string(),
                        second: self.groupoid.name(b).to_string(),
                    });
                }
            }
        }
        let mut x = self.zero();
        for &m in &members {
            for row in &mut x.data {
                row[m] = 1;
            }
        }
        Ok(x)
    }

    /// The indicator of a set of units. Unit sets are always bisections.
    pub fn unit_indicator(&self, u: &UnitSet) -> Result<AlgebraElement, AlgebraError> {
        for idx in u.iter() {
            if idx >= self.groupoid.unit_count() {
                return Err(AlgebraError::Groupoid(GroupoidError::NotAUnitIndex(idx)));
            }
        }
        let mut x = self.zero();
        for idx in u.iter() {
            for row in &mut x.data {
                row[idx] = 1;
            }
        }
        Ok(x)
    }

    /// Left convolution of a coefficient row by the singleton indicator of
    /// morphism `s`.
    fn left_action(&self, s: usize, row: &[u64], n: u64) -> Vec<u64> {
        let mut out = vec![0; row.len()];
        for &(b, ab) in &self.left_by[s] {
            out[ab] = (out[ab] + row[b]) % n;
        }
        out
    }

    /// Right convolution of a coefficient row by the singleton indicator of
    /// morphism `s`.
    fn right_action(&self, s: usize, row: &[u64], n: u64) -> Vec<u64> {
        let mut out = vec![0; row.len()];
        for &(a, ab) in &self.right_by[s] {
            out[ab] = (out[ab] + row[a]) % n;
        }
        out
    }

    /// Closes a module basis under left and right convolution by every
    /// singleton indicator.
    fn saturate(&self, basis: &mut ModBasis) {
        let n = basis.modulus();
        loop {
            let mut grew = false;
            let snapshot: Vec<Vec<u64>> = basis.rows().to_vec();
            for row in &snapshot {
                for s in 0..self.morphism_count() {
                    grew |= basis.insert(self.left_action(s, row, n));
                    grew |= basis.insert(self.right_action(s, row, n));
                }
            }
            if !grew {
                break;
            }
        }
    }

    /// The smallest two-sided ideal containing `gens`.
    pub fn ideal_generate(&self, gens: &[AlgebraElement]) -> AlgebraIdeal {
        for g in gens {
            self.assert_shape(g);
        }
        let m = self.morphism_count();
        let factors = self
            .moduli
            .iter()
            .enumerate()
            .map(|(f, &n)| {
                let mut basis =
                    ModBasis::from_rows(n, m, gens.iter().map(|g| g.data[f].clone()));
                self.saturate(&mut basis);
                basis
            })
            .collect();
        AlgebraIdeal { factors }
    }

    /// The zero ideal.
    pub fn ideal_zero(&self) -> AlgebraIdeal {
        let m = self.morphism_count();
        AlgebraIdeal { factors: self.moduli.iter().map(|&n| ModBasis::zero(n, m)).collect() }
    }

    /// The whole algebra as an ideal.
    pub fn ideal_whole(&self) -> AlgebraIdeal {
        let m = self.morphism_count();
        AlgebraIdeal { factors: self.moduli.iter().map(|&n| ModBasis::full(n, m)).collect() }
    }

    fn assert_ideal_shape(&self, i: &AlgebraIdeal) {
        assert_eq!(i.factors.len(), self.moduli.len(), "ideal from a different algebra");
        for (basis, &n) in i.factors.iter().zip(&self.moduli) {
            assert_eq!(basis.modulus(), n, "ideal from a different algebra");
            assert_eq!(basis.cols(), self.morphism_count(), "ideal from a different algebra");
        }
    }

    /// Ideal sum `a + b`.
    pub fn ideal_sum(&self, a: &AlgebraIdeal, b: &AlgebraIdeal) -> AlgebraIdeal {
        self.assert_ideal_shape(a);
        self.assert_ideal_shape(b);
        let factors = a.factors.iter().zip(&b.factors).map(|(x, y)| x.sum(y)).collect();
        AlgebraIdeal { factors }
    }

    /// Ideal intersection `a ∩ b`.
    pub fn ideal_intersect(&self, a: &AlgebraIdeal, b: &AlgebraIdeal) -> AlgebraIdeal {
        self.assert_ideal_shape(a);
        self.assert_ideal_shape(b);
        let factors = a.factors.iter().zip(&b.factors).map(|(x, y)| x.intersect(y)).collect();
        AlgebraIdeal { factors }
    }

    /// Whether `a ⊇ b`.
    pub fn ideal_contains(&self, a: &AlgebraIdeal, b: &AlgebraIdeal) -> bool {
        self.assert_ideal_shape(a);
        self.assert_ideal_shape(b);
        a.factors.iter().zip(&b.factors).all(|(x, y)| x.contains_module(y))
    }

    /// Whether the element `x` lies in the ideal `i`.
    pub fn ideal_contains_element(&self, i: &AlgebraIdeal, x: &AlgebraElement) -> bool {
        self.assert_ideal_shape(i);
        self.assert_shape(x);
        i.factors.iter().zip(&x.data).all(|(basis, row)| basis.contains(row))
    }

    /// Whether the module `i` is closed under convolution on both sides,
    /// i.e. really is a two-sided ideal.
    pub fn is_ideal(&self, i: &AlgebraIdeal) -> bool {
        self.assert_ideal_shape(i);
        i.factors.iter().all(|basis| {
            let n = basis.modulus();
            basis.rows().iter().all(|row| {
                (0..self.morphism_count()).all(|s| {
                    basis.contains(&self.left_action(s, row, n))
                        && basis.contains(&self.right_action(s, row, n))
                })
            })
        })
    }

    /// Every two-sided ideal, each exactly once, in a deterministic order.
    ///
    /// Works factor by factor: the principal ideals of all candidate
    /// generators (deduplicated up to unit scaling) are closed under
    /// pairwise sum, and the factors are then combined. Refuses inputs
    /// whose sweep would be too large.
    pub fn enumerate_all_ideals(&self) -> Result<Vec<AlgebraIdeal>, AlgebraError> {
        let m = self.morphism_count();
        let card = self.ring.cardinality()?;
        if m > MAX_ENUMERATION_MORPHISMS {
            return Err(AlgebraError::EnumerationBudget(format!(
                "{m} morphisms exceeds the cap of {MAX_ENUMERATION_MORPHISMS}"
            )));
        }
        if card > MAX_ENUMERATION_RING {
            return Err(AlgebraError::EnumerationBudget(format!(
                "ring of size {card} exceeds the cap of {MAX_ENUMERATION_RING}"
            )));
        }
        let weight = m as u32 * ceil_log2(card);
        if weight > MAX_ENUMERATION_WEIGHT {
            return Err(AlgebraError::EnumerationBudget(format!(
                "{m} morphisms over a ring of size {card} needs a sweep of 2^{weight} > 2^{MAX_ENUMERATION_WEIGHT} generators"
            )));
        }

        let mut per_factor: Vec<Vec<ModBasis>> = Vec::new();
        for &n in &self.moduli {
            let units: Vec<u64> = (1..n).filter(|&u| u.gcd(&n) == 1).collect();
            let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
            let mut list: Vec<ModBasis> = Vec::new();
            let mut vector = vec![0u64; m];
            'sweep: loop {
                // Unit multiples generate the same principal ideal, so only
                // the lexicographically least associate is swept.
                let canonical = units.iter().all(|&u| {
                    let scaled: Vec<u64> = vector.iter().map(|&x| mulmod(u, x, n)).collect();
                    scaled >= vector
                });
                if canonical {
                    let mut basis = ModBasis::from_rows(n, m, [vector.clone()]);
                    self.saturate(&mut basis);
                    if seen.insert(basis.rows().to_vec()) {
                        list.push(basis);
                    }
                }
                for slot in vector.iter_mut() {
                    *slot += 1;
                    if *slot < n {
                        continue 'sweep;
                    }
                    *slot = 0;
                }
                break;
            }
            let mut i = 0;
            while i < list.len() {
                let mut j = 0;
                while j <= i {
                    let s = list[i].sum(&list[j]);
                    if seen.insert(s.rows().to_vec()) {
                        list.push(s);
                    }
                    j += 1;
                }
                i += 1;
            }
            list.sort();
            per_factor.push(list);
        }

        let mut out = vec![AlgebraIdeal { factors: Vec::new() }];
        for factor_ideals in &per_factor {
            let mut next = Vec::with_capacity(out.len() * factor_ideals.len());
            for partial in &out {
                for basis in factor_ideals {
                    let mut factors = partial.factors.clone();
                    factors.push(basis.clone());
                    next.push(AlgebraIdeal { factors });
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }

    /// The ideal of elements supported on morphisms with source (hence
    /// range) in the invariant open set `u`.
    pub fn ideal_from_open(&self, u: &UnitSet) -> Result<AlgebraIdeal, AlgebraError> {
        for idx in u.iter() {
            if idx >= self.groupoid.unit_count() {
                return Err(AlgebraError::Groupoid(GroupoidError::NotAUnitIndex(idx)));
            }
        }
        if !self.groupoid.is_invariant(u) {
            let witness = (0..self.morphism_count())
                .find(|&m| u.contains(self.groupoid.source(m)) != u.contains(self.groupoid.range(m)))
                .expect("a non-invariant set has a crossing morphism");
            return Err(AlgebraError::Groupoid(GroupoidError::NotInvariant(
                self.groupoid.name(witness).to_string(),
            )));
        }
        let m = self.morphism_count();
        let supported: Vec<usize> =
            (0..m).filter(|&g| u.contains(self.groupoid.source(g))).collect();
        let factors = self
            .moduli
            .iter()
            .map(|&n| {
                ModBasis::from_rows(
                    n,
                    m,
                    supported.iter().map(|&g| {
                        let mut row = vec![0; m];
                        row[g] = 1;
                        row
                    }),
                )
            })
            .collect();
        let ideal = AlgebraIdeal { factors };
        debug_assert!(self.is_ideal(&ideal));
        Ok(ideal)
    }

    /// Checks exactness of
    /// `0 → A(G|u) → A(G) → A(G|complement) → 0`
    /// where the first map extends by zero and the second restricts.
    pub fn check_exact_sequence(&self, u: &UnitSet) -> Result<ExactnessReport, AlgebraError> {
        let sub = self.groupoid.restrict(u)?;
        let complement =
            UnitSet::from_indices((0..self.groupoid.unit_count()).filter(|i| !u.contains(*i)));
        let quot = self.groupoid.restrict(&complement)?;
        let open_ideal = self.ideal_from_open(u)?;

        let m = self.morphism_count();
        let sub_to_parent: Vec<usize> = (0..sub.morphism_count())
            .map(|j| self.groupoid.index_of(sub.name(j)).expect("restriction preserves names"))
            .collect();
        let parent_to_quot: Vec<Option<usize>> =
            (0..m).map(|a| quot.index_of(self.groupoid.name(a))).collect();

        let mut report = ExactnessReport {
            i_injective: true,
            q_surjective: true,
            image_matches: true,
            kernel_matches: true,
            failures: Vec::new(),
        };
        for (f, &n) in self.moduli.iter().enumerate() {
            let extension_rows: Vec<Vec<u64>> = sub_to_parent
                .iter()
                .map(|&p| {
                    let mut row = vec![0; m];
                    row[p] = 1;
                    row
                })
                .collect();
            if !left_kernel(n, m, &extension_rows).is_zero() {
                report.i_injective = false;
                report.failures.push(format!("factor {f}: the extension map is not injective"));
            }
            let image = ModBasis::from_rows(n, m, extension_rows);
            if image != open_ideal.factors[f] {
                report.image_matches = false;
                report.failures.push(format!(
                    "factor {f}: the extension image differs from the open-support ideal"
                ));
            }

            let restriction_rows: Vec<Vec<u64>> = parent_to_quot
                .iter()
                .map(|&q| {
                    let mut row = vec![0; quot.morphism_count()];
                    if let Some(q) = q {
                        row[q] = 1;
                    }
                    row
                })
                .collect();
            let image_of_all = apply_map(n, quot.morphism_count(), &ModBasis::full(n, m), |row| {
                let mut out = vec![0; quot.morphism_count()];
                for (a, &c) in row.iter().enumerate() {
                    if let Some(q) = parent_to_quot[a] {
                        out[q] = (out[q] + c) % n;
                    }
                }
                out
            });
            if !image_of_all.is_full() {
                report.q_surjective = false;
                report.failures.push(format!("factor {f}: the restriction map is not surjective"));
            }
            let kernel = left_kernel(n, quot.morphism_count(), &restriction_rows);
            if kernel != open_ideal.factors[f] {
                report.kernel_matches = false;
                report.failures.push(format!(
                    "factor {f}: the restriction kernel differs from the open-support ideal"
                ));
            }
        }
        Ok(report)
    }

    /// Kernel of the representation of the algebra on the free module over
    /// the unit space, where a morphism acts as the matrix unit sending its
    /// source basis vector to its range basis vector.
    pub fn unit_rep_kernel(&self) -> AlgebraIdeal {
        let m = self.morphism_count();
        let units = self.groupoid.unit_count();
        let rows: Vec<Vec<u64>> = (0..m)
            .map(|g| {
                let mut row = vec![0; units * units];
                row[self.groupoid.range(g) * units + self.groupoid.source(g)] = 1;
                row
            })
            .collect();
        let factors =
            self.moduli.iter().map(|&n| left_kernel(n, units * units, &rows)).collect();
        let ideal = AlgebraIdeal { factors };
        debug_assert!(self.is_ideal(&ideal));
        ideal
    }

    /// Whether the ideal contains a nonzero element supported on the units.
    pub fn meets_unit_subalgebra(&self, i: &AlgebraIdeal) -> bool {
        self.assert_ideal_shape(i);
        let m = self.morphism_count();
        i.factors.iter().zip(&self.moduli).any(|(basis, &n)| {
            let unit_span = ModBasis::from_rows(
                n,
                m,
                (0..self.groupoid.unit_count()).map(|u| {
                    let mut row = vec![0; m];
                    row[u] = 1;
                    row
                }),
            );
            !basis.intersect(&unit_span).is_zero()
        })
    }

    /// Whether `i` is basic: `r·1_K ∈ i` for nonzero `r` forces `1_K ∈ i`.
    ///
    /// Multiplying by singleton unit indicators shows `r·1_K ∈ i` is the
    /// same as `r·1_{{u}} ∈ i` for every `u ∈ K`, so the check runs unit by
    /// unit instead of sweeping subsets.
    pub fn is_basic_ideal(&self, i: &AlgebraIdeal) -> bool {
        self.assert_ideal_shape(i);
        (0..self.groupoid.unit_count()).all(|u| {
            let gens: Vec<u64> = i
                .factors
                .iter()
                .enumerate()
                .map(|(f, basis)| self.unit_multiple_generator(f, basis, u))
                .collect();
            let has_nonzero_multiple =
                gens.iter().zip(&self.moduli).any(|(&d, &n)| d < n);
            !has_nonzero_multiple || gens.iter().all(|&d| d == 1)
        })
    }

    /// The generator of `{r : r·1_u ∈ i}` inside `Z/n` for factor `f`,
    /// with `n` standing for the zero ideal.
    fn unit_multiple_generator(&self, f: usize, basis: &ModBasis, u: usize) -> u64 {
        let n = self.moduli[f];
        let mut ds = divisors(n);
        ds.sort_unstable();
        for d in ds {
            let mut row = vec![0; self.morphism_count()];
            row[u] = d % n;
            if basis.contains(&row) {
                return d;
            }
        }
        n
    }

    /// Whether `i` is spanned by the bisection multiples it contains: by
    /// the elements `r·1_B` with `B` a bisection and `r·1_{s(B)} ∈ i`.
    pub fn spanning_property_holds(&self, i: &AlgebraIdeal) -> bool {
        self.assert_ideal_shape(i);
        let m = self.morphism_count();
        i.factors.iter().enumerate().all(|(f, basis)| {
            let n = self.moduli[f];
            let span = ModBasis::from_rows(
                n,
                m,
                (0..m).map(|g| {
                    let d = self.unit_multiple_generator(f, basis, self.groupoid.source(g));
                    let mut row = vec![0; m];
                    row[g] = d % n;
                    row
                }),
            );
            span == *basis
        })
    }

    /// Whether restricting any member of `i` to the unit space lands back
    /// in `i`.
    pub fn restriction_property_holds(&self, i: &AlgebraIdeal) -> bool {
        self.assert_ideal_shape(i);
        let units = self.groupoid.unit_count();
        i.factors.iter().all(|basis| {
            basis.rows().iter().all(|row| {
                let projected: Vec<u64> =
                    row.iter().enumerate().map(|(g, &c)| if g < units { c } else { 0 }).collect();
                basis.contains(&projected)
            })
        })
    }

    fn check_carrier(&self, carrier: &CarrierLattice) -> Result<(), AlgebraError> {
        let matches = carrier.kind() == CarrierKind::Groupoid
            && carrier.point_count() == self.groupoid.unit_count()
            && (0..carrier.point_count()).all(|p| carrier.point_name(p) == self.groupoid.name(p));
        if matches {
            Ok(())
        } else {
            Err(AlgebraError::WrongShape(
                "the carrier lattice does not describe this groupoid's unit space".to_string(),
            ))
        }
    }

    /// Realizes an order-reversing ideal-valued lattice function as the
    /// ideal spanned by `{r·f : r ∈ π(U), supp f ⊆ G|U}` over the nonempty
    /// invariant open sets `U`. Requires a strongly effective groupoid and
    /// a valid function.
    pub fn realize_gamma(
        &self,
        carrier: &CarrierLattice,
        pi: &PiFunction,
    ) -> Result<AlgebraIdeal, AlgebraError> {
        self.check_carrier(carrier)?;
        carrier.require_hypothesis()?;
        if pi.ring() != &self.ring {
            return Err(AlgebraError::Pi(PiError::RingMismatch(
                format!("{}", pi.ring()),
                format!("{}", self.ring),
            )));
        }
        let violations = pi.validate(carrier);
        if let Some(v) = violations.first() {
            return Err(AlgebraError::Pi(PiError::InvalidInput(v.render(carrier, pi))));
        }
        let m = self.morphism_count();
        let mut factor_rows: Vec<Vec<Vec<u64>>> = vec![Vec::new(); self.moduli.len()];
        for member in 1..carrier.member_count() {
            let mask = carrier.member_mask(member);
            let gens = pi.value(member).leaf_generators(&self.ring)?;
            for g in 0..m {
                if mask & (1 << self.groupoid.source(g)) != 0 {
                    for (f, rows) in factor_rows.iter_mut().enumerate() {
                        let d = gens[f] % self.moduli[f];
                        if d != 0 {
                            let mut row = vec![0; m];
                            row[g] = d;
                            rows.push(row);
                        }
                    }
                }
            }
        }
        let factors = self
            .moduli
            .iter()
            .zip(factor_rows)
            .map(|(&n, rows)| ModBasis::from_rows(n, m, rows))
            .collect();
        let ideal = AlgebraIdeal { factors };
        debug_assert!(self.is_ideal(&ideal));
        Ok(ideal)
    }

    /// Reads an order-reversing lattice function off an ideal:
    /// `π(U) = {r : r·1_B ∈ i for every B ⊆ U}`. Requires a strongly
    /// effective groupoid; the result is validated before it is returned.
    pub fn extract_pi(
        &self,
        carrier: &CarrierLattice,
        i: &AlgebraIdeal,
    ) -> Result<PiFunction, AlgebraError> {
        self.check_carrier(carrier)?;
        carrier.require_hypothesis()?;
        self.assert_ideal_shape(i);
        let mut values = Vec::with_capacity(carrier.member_count() - 1);
        for member in 1..carrier.member_count() {
            let mask = carrier.member_mask(member);
            let gens: Vec<u64> = self
                .moduli
                .iter()
                .enumerate()
                .map(|(f, &_n)| {
                    let mut acc: u64 = 1;
                    for u in 0..self.groupoid.unit_count() {
                        if mask & (1 << u) != 0 {
                            let d = self.unit_multiple_generator(f, &i.factors[f], u);
                            // All generators divide n, so the lcm does too.
                            acc = (acc as u128 / acc.gcd(&d) as u128 * d as u128) as u64;
                        }
                    }
                    acc
                })
                .collect();
            values.push(RIdeal::from_leaf_generators(&self.ring, &gens)?);
        }
        let pi = PiFunction::new(self.ring.clone(), values, carrier)?;
        let violations = pi.validate(carrier);
        if let Some(v) = violations.first() {
            return Err(AlgebraError::Pi(PiError::InvalidInput(v.render(carrier, &pi))));
        }
        Ok(pi)
    }
}
