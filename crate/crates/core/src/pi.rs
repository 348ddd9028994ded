//! The symbolic ideal calculus: π-functions on a carrier lattice.
//!
//! A *carrier lattice* is either the lattice of saturated hereditary vertex
//! sets of a graph or the lattice of invariant open unit sets of a finite
//! groupoid, presented uniformly as bitmask sets over named points. A
//! *π-function* assigns to every nonempty member an ideal of the
//! coefficient ring such that joins turn into intersections,
//! `π(H ∨ K) = π(H) ∩ π(K)`, and containment reverses, `H ⊆ K ⟹ π(K) ⊆
//! π(H)`. Under the standing hypotheses — Condition (K) in graph mode,
//! strong effectiveness in groupoid mode — these functions parameterize the
//! (basic) two-sided ideal lattice of the associated algebra, with
//! containment, meet, and join of ideals computed entirely on π.
//!
//! The join is *not* the pointwise sum of ideals. It is evaluated through
//! the tail decomposition: every nonempty member `H` satisfies
//! `π(H) = ⋂ {π(T) : T ∈ Tails(H)}` where `Tails(H)` collects the closures
//! of the tail-stable points of `H` (in groupoid mode: the orbits inside
//! `H`), joins decompose as `Tails(H ∨ K) = Tails(H) ∪ Tails(K)`, and
//! `(π1 ∨ π2)(H) = ⋂ {π1(T) + π2(T) : T ∈ Tails(H)}`. The computed join is
//! verified to validate and to dominate both inputs before it is returned.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::graph::{Graph, GraphError, LassoPath, VertexSet};
use crate::groupoid::{FiniteGroupoid, GroupoidError, UnitSet};
use crate::ring::{RIdeal, RingElement, RingError, RingSpec};

/// Budget for honest enumeration of all valid π-functions:
/// `|ideals| ^ |nonempty members|` may not exceed this.
pub const MAX_PI_ENUMERATION: u128 = 1 << 20;

/// Which structure a carrier lattice came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CarrierKind {
    /// Saturated hereditary vertex sets of a graph.
    Graph,
    /// Invariant open unit sets of a groupoid.
    Groupoid,
}

/// Failures in the π calculus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PiError {
    /// Underlying ring failure.
    Ring(RingError),
    /// Underlying graph failure.
    Graph(GraphError),
    /// Underlying groupoid failure.
    Groupoid(GroupoidError),
    /// The values do not match the carrier's nonempty member count.
    WrongLength {
        /// Number of nonempty members in the carrier.
        expected: usize,
        /// Number of values supplied.
        found: usize,
    },
    /// The two π-functions live over different ring specs.
    RingMismatch(String, String),
    /// An operation needs valid inputs but a law fails; the payload renders
    /// the witness.
    InvalidInput(String),
    /// The carrier violates the standing hypothesis (Condition (K) /
    /// strong effectiveness) required for the ideal interpretation.
    HypothesisNotMet(String),
    /// A point name is not a point of the carrier.
    UnknownPoint(String),
    /// A point set is not a member of the carrier lattice.
    NotAMember(String),
    /// A monomial with two empty paths has no identifiable base vertex.
    EmptyMonomial,
    /// The paths of a monomial end at different vertices.
    SourceMismatch(String, String),
    /// Enumeration would exceed [`MAX_PI_ENUMERATION`].
    EnumerationBudget(u128),
    /// A tail assignment is missing a value for a tail member.
    MissingTail(String),
    /// Internal consistency failure: a computed join violated its own
    /// postconditions. This indicates a bug and is surfaced, never ignored.
    JoinUnsound(String),
}

impl fmt::Display for PiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PiError::Ring(e) => write!(f, "{e}"),
            PiError::Graph(e) => write!(f, "{e}"),
            PiError::Groupoid(e) => write!(f, "{e}"),
            PiError::WrongLength { expected, found } => {
                write!(f, "expected one ideal per nonempty lattice member ({expected}), found {found}")
            }
            PiError::RingMismatch(a, b) => write!(f, "ring specs differ: {a} vs {b}"),
            PiError::InvalidInput(w) => write!(f, "input is not a valid lattice function: {w}"),
            PiError::HypothesisNotMet(w) => write!(f, "{w}"),
            PiError::UnknownPoint(p) => write!(f, "unknown point {p:?}"),
            PiError::NotAMember(s) => write!(f, "{s} is not a member of the carrier lattice"),
            PiError::EmptyMonomial => {
                write!(f, "a monomial with two empty paths has no identifiable base vertex")
            }
            PiError::SourceMismatch(a, b) => {
                write!(f, "monomial paths end at different vertices ({a} vs {b})")
            }
            PiError::EnumerationBudget(n) => {
                write!(f, "{n} candidate functions exceed the enumeration budget of {MAX_PI_ENUMERATION}")
            }
            PiError::MissingTail(t) => write!(f, "tail assignment missing a value at {t}"),
            PiError::JoinUnsound(w) => write!(f, "computed join failed verification: {w}"),
        }
    }
}

impl core::error::Error for PiError {}

impl From<RingError> for PiError {
    fn from(e: RingError) -> PiError {
        PiError::Ring(e)
    }
}

impl From<GraphError> for PiError {
    fn from(e: GraphError) -> PiError {
        PiError::Graph(e)
    }
}

impl From<GroupoidError> for PiError {
    fn from(e: GroupoidError) -> PiError {
        PiError::Groupoid(e)
    }
}

/// A finite lattice of point sets closed under join and intersection,
/// with the tail data needed by the ideal calculus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CarrierLattice {
    kind: CarrierKind,
    point_names: Vec<String>,
    /// Member bitmasks sorted by (size, mask); `members[0]` is the empty set
    /// and the last member is the full point set.
    members: Vec<u64>,
    /// For each point: the mask of its tail value — the closure of the point
    /// if it is tail-stable (graph mode) or its orbit (groupoid mode).
    point_tail: Vec<Option<u64>>,
    /// `None` when the standing hypothesis holds; otherwise a description of
    /// the violation.
    hypothesis_violation: Option<String>,
}

impl CarrierLattice {
    /// The saturated-hereditary lattice of a graph. Requires the no-sources
    /// hypothesis; Condition (K) is recorded (not required — operations that
    /// need it check [`CarrierLattice::require_hypothesis`]).
    pub fn from_graph(graph: &Graph) -> Result<CarrierLattice, PiError> {
        if let Err(sources) = graph.validate() {
            return Err(PiError::Graph(GraphError::SourceVertices(format!("{{{}}}", sources.join(", ")))));
        }
        let members: Vec<u64> = graph.enumerate_sh()?.into_iter().map(|s| s.bits()).collect();
        let analysis = graph.tail_analysis();
        let point_tail = (0..graph.vertex_count())
            .map(|v| analysis.stable[v].then(|| analysis.sh[v].bits()))
            .collect();
        let hypothesis_violation = graph.condition_k_violation().map(|v| {
            format!(
                "the graph fails Condition (K): vertex {} has exactly one return path",
                graph.vertex_name(v)
            )
        });
        Ok(CarrierLattice {
            kind: CarrierKind::Graph,
            point_names: (0..graph.vertex_count()).map(|v| graph.vertex_name(v).to_string()).collect(),
            members,
            point_tail,
            hypothesis_violation,
        })
    }

    /// The invariant-open lattice of a valid finite groupoid. Strong
    /// effectiveness is recorded, not required.
    pub fn from_groupoid(groupoid: &FiniteGroupoid) -> Result<CarrierLattice, PiError> {
        groupoid.require_valid()?;
        if groupoid.unit_count() > 64 {
            return Err(PiError::Groupoid(GroupoidError::Invalid(format!(
                "{} units exceed the supported maximum of 64",
                groupoid.unit_count()
            ))));
        }
        let mask = |s: &UnitSet| s.iter().fold(0u64, |m, u| m | (1 << u));
        let mut members: Vec<u64> = groupoid.invariant_open_sets()?.iter().map(&mask).collect();
        members.sort_by_key(|&m| (m.count_ones(), m));
        members.dedup();
        let orbits = groupoid.orbits();
        let point_tail = (0..groupoid.unit_count())
            .map(|u| orbits.iter().find(|o| o.contains(u)).map(&mask))
            .collect();
        let mut hypothesis_violation = None;
        for set in groupoid.invariant_open_sets()? {
            if set.is_empty() {
                continue;
            }
            if !groupoid.restrict(&set)?.is_effective() {
                hypothesis_violation = Some(format!(
                    "the groupoid is not strongly effective: its restriction to {} has isotropy outside the units",
                    groupoid.render_unit_set(&set)
                ));
                break;
            }
        }
        Ok(CarrierLattice {
            kind: CarrierKind::Groupoid,
            point_names: (0..groupoid.unit_count()).map(|u| groupoid.name(u).to_string()).collect(),
            members,
            point_tail,
            hypothesis_violation,
        })
    }

    /// Graph or groupoid mode.
    pub fn kind(&self) -> CarrierKind {
        self.kind
    }

    /// Number of points (vertices / units).
    pub fn point_count(&self) -> usize {
        self.point_names.len()
    }

    /// Name of point `p`.
    pub fn point_name(&self, p: usize) -> &str {
        &self.point_names[p]
    }

    /// Number of lattice members, the empty set included.
    pub fn member_count(&self) -> usize {
        self.members.len()
    }

    /// Bitmask of member `i`.
    pub fn member_mask(&self, i: usize) -> u64 {
        self.members[i]
    }

    /// Index of the full point set (always the last member).
    pub fn full_index(&self) -> usize {
        self.members.len() - 1
    }

    /// Renders member `i` as `{name, name}`.
    pub fn member_label(&self, i: usize) -> String {
        let names: Vec<&str> = (0..self.point_names.len())
            .filter(|p| self.members[i] & (1 << p) != 0)
            .map(|p| self.point_names[p].as_str())
            .collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Index of the member with the given mask.
    pub fn index_of_mask(&self, mask: u64) -> Option<usize> {
        self.members.iter().position(|&m| m == mask)
    }

    /// Resolves point names to a member index.
    pub fn member_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<usize, PiError> {
        let mut mask = 0u64;
        for n in names {
            let p = self
                .point_names
                .iter()
                .position(|q| q == n.as_ref())
                .ok_or_else(|| PiError::UnknownPoint(n.as_ref().to_string()))?;
            mask |= 1 << p;
        }
        self.index_of_mask(mask).ok_or_else(|| {
            let listed: Vec<&str> = names.iter().map(|n| n.as_ref()).collect();
            PiError::NotAMember(format!("{{{}}}", listed.join(", ")))
        })
    }

    /// Whether member `i` is contained in member `j`.
    pub fn leq_members(&self, i: usize, j: usize) -> bool {
        self.members[i] & !self.members[j] == 0
    }

    /// Join: the smallest member containing both (members are sorted by
    /// size, and the member family is closed under intersection, so the
    /// first superset found is the closure of the union).
    pub fn join_members(&self, i: usize, j: usize) -> usize {
        let union = self.members[i] | self.members[j];
        self.members
            .iter()
            .position(|&m| union & !m == 0)
            .expect("the full point set contains every union")
    }

    /// Meet: both member families are closed under intersection, so the
    /// meet is the literal intersection.
    pub fn meet_members(&self, i: usize, j: usize) -> usize {
        self.index_of_mask(self.members[i] & self.members[j])
            .expect("carrier lattices are closed under intersection")
    }

    /// The tail members of member `i`: the distinct tail values of its
    /// points, as sorted member indices. Nonempty for every nonempty member.
    pub fn tails_of(&self, i: usize) -> Vec<usize> {
        let mut tails: Vec<usize> = (0..self.point_names.len())
            .filter(|p| self.members[i] & (1 << p) != 0)
            .filter_map(|p| self.point_tail[p])
            .map(|mask| self.index_of_mask(mask).expect("tail values are lattice members"))
            .collect();
        tails.sort_unstable();
        tails.dedup();
        tails
    }

    /// All members that occur as tail values, sorted.
    pub fn tail_members(&self) -> Vec<usize> {
        self.tails_of(self.full_index())
    }

    /// The hypothesis violation message, if the carrier fails Condition (K)
    /// (graph mode) or strong effectiveness (groupoid mode).
    pub fn hypothesis_violation(&self) -> Option<&str> {
        self.hypothesis_violation.as_deref()
    }

    /// Errors unless the standing hypothesis holds.
    pub fn require_hypothesis(&self) -> Result<(), PiError> {
        match &self.hypothesis_violation {
            None => Ok(()),
            Some(w) => Err(PiError::HypothesisNotMet(w.clone())),
        }
    }

    /// Whether the nonempty members form a chain under inclusion.
    pub fn is_chain(&self) -> bool {
        self.members.windows(2).all(|w| w[0] & !w[1] == 0)
    }
}

/// A single broken law found by [`PiFunction::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PiViolation {
    /// `smaller ⊆ larger` but `π(larger) ⊄ π(smaller)`.
    NotOrderReversing {
        /// Index of the smaller member.
        smaller: usize,
        /// Index of the larger member.
        larger: usize,
    },
    /// `π(left ∨ right) ≠ π(left) ∩ π(right)`.
    JoinLaw {
        /// Index of the left member.
        left: usize,
        /// Index of the right member.
        right: usize,
    },
}

impl PiViolation {
    /// Human-readable witness, with member labels and ideal values.
    pub fn render(&self, carrier: &CarrierLattice, pi: &PiFunction) -> String {
        match *self {
            PiViolation::NotOrderReversing { smaller, larger } => format!(
                "order reversal fails: {} ⊆ {} but π({}) = {} does not contain π({}) = {}",
                carrier.member_label(smaller),
                carrier.member_label(larger),
                carrier.member_label(smaller),
                pi.value(smaller).render(&pi.ring),
                carrier.member_label(larger),
                pi.value(larger).render(&pi.ring),
            ),
            PiViolation::JoinLaw { left, right } => {
                let join = carrier.join_members(left, right);
                let meet_value = pi.value(left).intersect(pi.value(right));
                format!(
                    "join law fails: π({} ∨ {}) = π({}) = {} but π({}) ∩ π({}) = {}",
                    carrier.member_label(left),
                    carrier.member_label(right),
                    carrier.member_label(join),
                    pi.value(join).render(&pi.ring),
                    carrier.member_label(left),
                    carrier.member_label(right),
                    meet_value.render(&pi.ring),
                )
            }
        }
    }
}

/// An ideal-valued function on the nonempty members of a carrier lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PiFunction {
    ring: RingSpec,
    /// `values[i]` is the value at member `i + 1` (the empty member is
    /// excluded; where formulas need it, `π(∅)` is the unit ideal).
    values: Vec<RIdeal>,
}

impl PiFunction {
    /// Builds a function from per-member values (indexed as the carrier's
    /// nonempty members, in order). Checks shape and canonicality, not the
    /// lattice laws — see [`PiFunction::validate`].
    pub fn new(ring: RingSpec, values: Vec<RIdeal>, carrier: &CarrierLattice) -> Result<PiFunction, PiError> {
        ring.validate()?;
        if values.len() != carrier.member_count() - 1 {
            return Err(PiError::WrongLength {
                expected: carrier.member_count() - 1,
                found: values.len(),
            });
        }
        for v in &values {
            ring.check_ideal(v)?;
        }
        Ok(PiFunction { ring, values })
    }

    /// The constant function.
    pub fn constant(ring: RingSpec, value: RIdeal, carrier: &CarrierLattice) -> Result<PiFunction, PiError> {
        let n = carrier.member_count() - 1;
        PiFunction::new(ring, vec![value; n], carrier)
    }

    /// The basic function of member `h`: the unit ideal on members contained
    /// in `h`, the zero ideal elsewhere. Parameterizes the ideal generated
    /// by the unit-set indicators inside `h`.
    pub fn basic(ring: RingSpec, h: usize, carrier: &CarrierLattice) -> Result<PiFunction, PiError> {
        ring.validate()?;
        let values = (1..carrier.member_count())
            .map(|k| if carrier.leq_members(k, h) { ring.unit_ideal() } else { ring.zero_ideal() })
            .collect();
        PiFunction::new(ring, values, carrier)
    }

    /// Builds the function `H ↦ ⋂ {f(T) : T ∈ Tails(H)}` from a value per
    /// tail member. Every function built this way is valid, and every valid
    /// function arises this way (from its own tail values).
    pub fn from_tail_assignment(
        ring: RingSpec,
        f: &BTreeMap<usize, RIdeal>,
        carrier: &CarrierLattice,
    ) -> Result<PiFunction, PiError> {
        ring.validate()?;
        for t in carrier.tail_members() {
            if !f.contains_key(&t) {
                return Err(PiError::MissingTail(carrier.member_label(t)));
            }
        }
        for v in f.values() {
            ring.check_ideal(v)?;
        }
        let values = (1..carrier.member_count())
            .map(|k| {
                carrier
                    .tails_of(k)
                    .iter()
                    .map(|t| f[t].clone())
                    .fold(ring.unit_ideal(), |acc, v| acc.intersect(&v))
            })
            .collect();
        PiFunction::new(ring, values, carrier)
    }

    /// The ring spec.
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    /// Value at nonempty member `i` (indices as in the carrier; `i ≥ 1`).
    pub fn value(&self, i: usize) -> &RIdeal {
        assert!(i >= 1, "the empty member carries no value");
        &self.values[i - 1]
    }

    /// Values over the nonempty members, in carrier order.
    pub fn values(&self) -> &[RIdeal] {
        &self.values
    }

    /// Checks both laws on all pairs, returning every witness found.
    pub fn validate(&self, carrier: &CarrierLattice) -> Vec<PiViolation> {
        let mut out = Vec::new();
        for i in 1..carrier.member_count() {
            for j in 1..carrier.member_count() {
                if i != j && carrier.leq_members(i, j) && !self.value(i).contains_ideal(self.value(j)) {
                    out.push(PiViolation::NotOrderReversing { smaller: i, larger: j });
                }
                if i < j {
                    let join = carrier.join_members(i, j);
                    if *self.value(join) != self.value(i).intersect(self.value(j)) {
                        out.push(PiViolation::JoinLaw { left: i, right: j });
                    }
                }
            }
        }
        out
    }

    /// Whether both laws hold everywhere.
    pub fn is_valid(&self, carrier: &CarrierLattice) -> bool {
        self.validate(carrier).is_empty()
    }

    fn check_compatible(&self, other: &PiFunction, carrier: &CarrierLattice) -> Result<(), PiError> {
        if self.ring != other.ring {
            return Err(PiError::RingMismatch(format!("{}", self.ring), format!("{}", other.ring)));
        }
        for p in [self, other] {
            if p.values.len() != carrier.member_count() - 1 {
                return Err(PiError::WrongLength {
                    expected: carrier.member_count() - 1,
                    found: p.values.len(),
                });
            }
            if let Some(v) = p.validate(carrier).first() {
                return Err(PiError::InvalidInput(v.render(carrier, p)));
            }
        }
        Ok(())
    }

    /// Pointwise containment; decides containment of the parameterized
    /// ideals.
    pub fn leq(&self, other: &PiFunction, carrier: &CarrierLattice) -> Result<bool, PiError> {
        self.check_compatible(other, carrier)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| b.contains_ideal(a)))
    }

    /// Pointwise intersection; computes the meet of the parameterized
    /// ideals.
    pub fn meet(&self, other: &PiFunction, carrier: &CarrierLattice) -> Result<PiFunction, PiError> {
        self.check_compatible(other, carrier)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.intersect(b)).collect();
        let out = PiFunction { ring: self.ring.clone(), values };
        debug_assert!(out.is_valid(carrier));
        Ok(out)
    }

    /// Least valid upper bound, evaluated on tails:
    /// `(π1 ∨ π2)(H) = ⋂ {π1(T) + π2(T) : T ∈ Tails(H)}`.
    ///
    /// Pointwise sum is wrong in general (it can break the join law); the
    /// tail formula is correct because valid functions are reconstructed
    /// from their tail values and sums of ideals are computed there, where
    /// no further intersection constraint binds. Requires the standing
    /// hypothesis so the result really is the ideal join. The result is
    /// re-verified (valid + dominates both inputs) before being returned.
    pub fn join(&self, other: &PiFunction, carrier: &CarrierLattice) -> Result<PiFunction, PiError> {
        carrier.require_hypothesis()?;
        self.check_compatible(other, carrier)?;
        let values: Vec<RIdeal> = (1..carrier.member_count())
            .map(|k| {
                carrier
                    .tails_of(k)
                    .iter()
                    .map(|&t| self.value(t).sum(other.value(t)))
                    .fold(self.ring.unit_ideal(), |acc, v| acc.intersect(&v))
            })
            .collect();
        let out = PiFunction { ring: self.ring.clone(), values };
        if let Some(v) = out.validate(carrier).first() {
            return Err(PiError::JoinUnsound(v.render(carrier, &out)));
        }
        for (input, name) in [(self, "left"), (other, "right")] {
            if !input.leq(&out, carrier)? {
                return Err(PiError::JoinUnsound(format!("result does not dominate the {name} input")));
            }
        }
        Ok(out)
    }

    /// The stabilized value along a lasso: `π(lasso_sh_limit(x))`. Graph
    /// mode only; `graph` must be the carrier's graph.
    pub fn rho_eval(&self, graph: &Graph, carrier: &CarrierLattice, x: &LassoPath) -> Result<RIdeal, PiError> {
        graph.validate_lasso(x)?;
        let limit = graph.lasso_sh_limit(x);
        let i = carrier
            .index_of_mask(limit.bits())
            .expect("singleton closures are lattice members");
        Ok(self.value(i).clone())
    }

    /// Membership of the monomial in the ideal parameterized by `self`:
    /// true iff the coefficient lies in `π(SH(v))` for the common source
    /// vertex `v` of the monomial's paths (the largest witness, since π
    /// reverses order). A zero coefficient is always a member.
    pub fn monomial_in_ideal(
        &self,
        graph: &Graph,
        carrier: &CarrierLattice,
        m: &Monomial,
    ) -> Result<bool, PiError> {
        self.ring.check_element(&m.coeff)?;
        let v = m.source(graph)?;
        if self.ring.is_zero(&m.coeff) {
            return Ok(true);
        }
        let h = graph.sh_closure(VertexSet::singleton(v));
        let i = carrier
            .index_of_mask(h.bits())
            .expect("singleton closures are lattice members");
        Ok(self.value(i).contains_element(&m.coeff))
    }

    /// Values at the tail members (groupoid mode: the orbit atoms), in
    /// carrier order. Describes the parameterized ideal as a direct sum
    /// over components.
    pub fn atom_profile(&self, carrier: &CarrierLattice) -> Vec<RIdeal> {
        carrier.tail_members().iter().map(|&t| self.value(t).clone()).collect()
    }

    /// Honest enumeration of every valid function: all assignments of an
    /// enumerable ring's ideals to nonempty members, filtered by
    /// [`PiFunction::validate`]. Budgeted by [`MAX_PI_ENUMERATION`].
    pub fn enumerate_valid(ring: &RingSpec, carrier: &CarrierLattice) -> Result<Vec<PiFunction>, PiError> {
        let ideals = ring.enumerate_ideals()?;
        let slots = carrier.member_count() - 1;
        let total = (ideals.len() as u128).checked_pow(slots as u32).unwrap_or(u128::MAX);
        if total > MAX_PI_ENUMERATION {
            return Err(PiError::EnumerationBudget(total));
        }
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut values = Vec::with_capacity(slots);
            for _ in 0..slots {
                values.push(ideals[(code % ideals.len() as u128) as usize].clone());
                code /= ideals.len() as u128;
            }
            let candidate = PiFunction { ring: ring.clone(), values };
            if candidate.is_valid(carrier) {
                out.push(candidate);
            }
        }
        Ok(out)
    }
}

/// A monomial `r · s_μ s_ν*` of a path algebra: a coefficient and two paths
/// with a common source vertex. Paths are edge-index sequences; one path
/// may be empty (a vertex path at the other's source), but not both.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial {
    /// The coefficient `r`.
    pub coeff: RingElement,
    /// The left path `μ`.
    pub mu: Vec<usize>,
    /// The right path `ν`.
    pub nu: Vec<usize>,
}

impl Monomial {
    /// Validates both paths and returns their common source vertex.
    pub fn source(&self, graph: &Graph) -> Result<usize, PiError> {
        graph.validate_path(&self.mu)?;
        graph.validate_path(&self.nu)?;
        match (graph.path_source(&self.mu), graph.path_source(&self.nu)) {
            (Some(a), Some(b)) if a == b => Ok(a),
            (Some(a), Some(b)) => Err(PiError::SourceMismatch(
                graph.vertex_name(a).to_string(),
                graph.vertex_name(b).to_string(),
            )),
            (Some(a), None) | (None, Some(a)) => Ok(a),
            (None, None) => Err(PiError::EmptyMonomial),
        }
    }
}
