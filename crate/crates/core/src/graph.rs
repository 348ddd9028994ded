//! Finite directed graphs and the combinatorics behind their path-algebra
//! ideal lattices.
//!
//! Conventions. An edge `e` has a source vertex `src(e)` and a range vertex
//! `rng(e)`. Paths are traversed from range to source: in a path
//! `e1 e2 ... en` consecutive edges satisfy `src(e_i) = rng(e_{i+1})`, the
//! path is based at `rng(e1)`, and an infinite path steps from a vertex `v`
//! through any edge `e` with `rng(e) = v` onward to `src(e)`. The standing
//! hypothesis for the lattice theory is *no sources*: every vertex has at
//! least one incoming edge (`rng^{-1}(v)` nonempty), so every vertex starts
//! an infinite path. [`Graph::validate`] reports vertices violating it.
//!
//! A vertex set `H` is *hereditary* when `rng(e) ∈ H` implies `src(e) ∈ H`
//! and *saturated* when a vertex all of whose incoming edges have sources in
//! `H` must itself lie in `H`. The saturated hereditary sets form a lattice
//! ([`ShLattice`]) whose join is the closure of the union; it indexes the
//! graded ideals of the path algebra the same way invariant unit sets index
//! the ideals of a groupoid algebra.
//!
//! Conditions (L) and (K) are the cycle hypotheses of that theory:
//! (L) asks that every simple cycle has an entry — an edge outside the
//! cycle whose range lies on it — and (K) that every vertex has either no
//! return path or at least two distinct ones (distinct as edge sequences).
//! (K) holds exactly when every quotient by a saturated hereditary set
//! satisfies (L), and both routes are implemented so they can be checked
//! against each other.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

/// Hard cap on vertex count (vertex sets are stored as 64-bit masks).
pub const MAX_VERTICES: usize = 64;

/// Budget for saturated-hereditary lattice enumeration.
pub const MAX_LATTICE_VERTICES: usize = 20;

/// A set of vertices of a particular graph, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{v}`.
    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    /// Builds a set from vertex indices.
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> VertexSet {
        indices.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    /// Builds a set from a raw bitmask (inverse of [`VertexSet::bits`]).
    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    /// The set with `v` added.
    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1 << v))
    }

    /// Membership test.
    pub fn contains(self, v: usize) -> bool {
        self.0 & (1 << v) != 0
    }

    /// Union.
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    /// Intersection.
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    /// Set difference.
    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Whether `self ⊆ other`.
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Number of members.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Whether the set is empty.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Iterates members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_VERTICES).filter(move |v| self.contains(*v))
    }

    /// The raw bitmask.
    pub fn bits(self) -> u64 {
        self.0
    }
}

/// Graph-level failures.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    /// More vertices than [`MAX_VERTICES`].
    TooManyVertices(usize),
    /// Two vertices or two edges share a name.
    DuplicateName(String),
    /// An edge endpoint or a path edge references an unknown name.
    UnknownName(String),
    /// Saturated-hereditary enumeration beyond [`MAX_LATTICE_VERTICES`].
    TooManyVerticesForLattice(usize),
    /// A quotient was requested by a set that is not saturated hereditary.
    NotSaturatedHereditary(String),
    /// A quotient by the full vertex set would be the empty graph.
    EmptyQuotient,
    /// The graph has vertices with no incoming edge, violating the standing
    /// no-sources hypothesis of the lattice theory.
    SourceVertices(String),
    /// A lasso path failed its structural checks.
    InvalidLasso(String),
    /// An edge sequence is not a path (an edge's source must be the next
    /// edge's range).
    InvalidPath(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices(k) => {
                write!(f, "{k} vertices exceed the supported maximum of {MAX_VERTICES}")
            }
            GraphError::DuplicateName(s) => write!(f, "duplicate name {s:?}"),
            GraphError::UnknownName(s) => write!(f, "unknown name {s:?}"),
            GraphError::TooManyVerticesForLattice(k) => {
                write!(f, "{k} vertices exceed the lattice enumeration budget of {MAX_LATTICE_VERTICES}")
            }
            GraphError::NotSaturatedHereditary(s) => {
                write!(f, "vertex set {s} is not saturated hereditary")
            }
            GraphError::EmptyQuotient => {
                write!(f, "quotient by the full vertex set would leave an empty graph")
            }
            GraphError::SourceVertices(s) => {
                write!(f, "the graph has source vertices (no incoming edge): {s}")
            }
            GraphError::InvalidLasso(s) => write!(f, "invalid lasso path: {s}"),
            GraphError::InvalidPath(s) => write!(f, "invalid path: {s}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A directed edge, endpoints stored as vertex indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    /// Edge name, unique among edges.
    pub name: String,
    /// Source vertex index.
    pub src: usize,
    /// Range vertex index.
    pub rng: usize,
}

/// A finite directed graph with named vertices and edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    /// Incoming edge indices per vertex (edges `e` with `rng(e) = v`).
    incoming: Vec<Vec<usize>>,
}

/// An infinite eventually-periodic path: a finite stem followed by a cycle
/// repeated forever. Both parts are edge-index sequences in traversal order;
/// the cycle must be nonempty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LassoPath {
    /// Edges walked before entering the cycle (may be empty).
    pub stem: Vec<usize>,
    /// The repeated cycle (nonempty, closed).
    pub cycle: Vec<usize>,
}

/// Per-vertex data from [`Graph::tail_analysis`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TailAnalysis {
    /// `sh[v]` is the saturated hereditary closure of `{v}`.
    pub sh: Vec<VertexSet>,
    /// `stable[v]` records whether `v` can reach, moving range-to-source
    /// inside the subgraph induced on `{u : sh[u] = sh[v]}`, a cycle of that
    /// subgraph.
    pub stable: Vec<bool>,
}

/// Result of [`Graph::quotient`]: the quotient graph together with any
/// vertices that lost all incoming edges (mathematically impossible for a
/// saturated input set, but reported rather than assumed).
#[derive(Clone, Debug)]
pub struct Quotient {
    /// The quotient graph on the complementary vertices.
    pub graph: Graph,
    /// Names of quotient vertices with no incoming edge.
    pub new_sources: Vec<String>,
}

impl Graph {
    /// Builds a graph from vertex names and `(name, src, rng)` edge triples.
    pub fn new(vertices: Vec<String>, edges: Vec<(String, String, String)>) -> Result<Graph, GraphError> {
        if vertices.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertices.len()));
        }
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateName(v.clone()));
            }
        }
        let mut edge_names = BTreeMap::new();
        let mut built = Vec::with_capacity(edges.len());
        let mut incoming = vec![Vec::new(); vertices.len()];
        for (i, (name, src, rng)) in edges.into_iter().enumerate() {
            if edge_names.insert(name.clone(), i).is_some() {
                return Err(GraphError::DuplicateName(name));
            }
            let src = *index.get(&src).ok_or(GraphError::UnknownName(src))?;
            let rng = *index.get(&rng).ok_or(GraphError::UnknownName(rng))?;
            incoming[rng].push(i);
            built.push(Edge { name, src, rng });
        }
        Ok(Graph { vertices, edges: built, incoming })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Name of vertex `v`.
    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    /// Index of the vertex named `name`.
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// The edge at index `e`.
    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    /// Index of the edge named `name`.
    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// Indices of edges with range `v`.
    pub fn incoming(&self, v: usize) -> &[usize] {
        &self.incoming[v]
    }

    /// The set of all vertices.
    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet::from_indices(0..self.vertices.len())
    }

    /// Vertices with no incoming edge (violations of the no-sources
    /// hypothesis).
    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.incoming[v].is_empty()).collect()
    }

    /// Validates the no-sources hypothesis; returns offending vertex names.
    pub fn validate(&self) -> Result<(), Vec<String>> {
        let sources = self.sources();
        if sources.is_empty() {
            Ok(())
        } else {
            Err(sources.into_iter().map(|v| self.vertices[v].clone()).collect())
        }
    }

    /// Renders a vertex set with names, e.g. `{v0, v1}`.
    pub fn render_vertex_set(&self, set: VertexSet) -> String {
        let names: Vec<&str> = set.iter().filter(|&v| v < self.vertices.len()).map(|v| self.vertex_name(v)).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Smallest saturated hereditary set containing `seed`: alternates the
    /// hereditary step (pull edge sources in along edges whose range is
    /// already inside) and the saturation step (pull a vertex in once all
    /// its incoming edges start inside) until nothing changes.
    pub fn sh_closure(&self, seed: VertexSet) -> VertexSet {
        let mut h = seed;
        loop {
            let mut grew = false;
            for e in &self.edges {
                if h.contains(e.rng) && !h.contains(e.src) {
                    h = h.with(e.src);
                    grew = true;
                }
            }
            for v in 0..self.vertices.len() {
                if !h.contains(v)
                    && !self.incoming[v].is_empty()
                    && self.incoming[v].iter().all(|&e| h.contains(self.edges[e].src))
                {
                    h = h.with(v);
                    grew = true;
                }
            }
            if !grew {
                return h;
            }
        }
    }

    /// Whether `h` is saturated hereditary.
    pub fn is_sh(&self, h: VertexSet) -> bool {
        self.sh_closure(h) == h
    }

    /// All saturated hereditary sets, via join-closure of the singleton
    /// closures (every saturated hereditary set is the join of the closures
    /// of its members). Budgeted at [`MAX_LATTICE_VERTICES`] vertices.
    pub fn enumerate_sh(&self) -> Result<Vec<VertexSet>, GraphError> {
        if self.vertices.len() > MAX_LATTICE_VERTICES {
            return Err(GraphError::TooManyVerticesForLattice(self.vertices.len()));
        }
        let mut members = vec![VertexSet::EMPTY];
        for v in 0..self.vertices.len() {
            let c = self.sh_closure(VertexSet::singleton(v));
            if !members.contains(&c) {
                members.push(c);
            }
        }
        loop {
            let mut added = false;
            let snapshot = members.clone();
            for (i, &a) in snapshot.iter().enumerate() {
                for &b in &snapshot[i + 1..] {
                    let join = self.sh_closure(a.union(b));
                    if !members.contains(&join) {
                        members.push(join);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        members.sort_by_key(|s| (s.len(), s.bits()));
        Ok(members)
    }

    /// An entryless simple cycle if one exists (the witness that Condition
    /// (L) fails), as a list of edge indices in traversal order.
    ///
    /// A simple cycle has no entry exactly when each of its vertices has
    /// in-degree one (the cycle supplies one incoming edge per vertex, and
    /// an entry would be a second). So it suffices to walk the partial map
    /// `v -> src(only incoming edge)` on in-degree-one vertices and detect a
    /// loop.
    pub fn condition_l_violation(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let unique_in: Vec<Option<usize>> =
            (0..n).map(|v| if self.incoming[v].len() == 1 { Some(self.incoming[v][0]) } else { None }).collect();
        let mut state = vec![0u8; n]; // 0 unvisited, 1 in progress, 2 done
        for start in 0..n {
            if state[start] != 0 || unique_in[start].is_none() {
                continue;
            }
            let mut path = Vec::new();
            let mut v = start;
            loop {
                match (state[v], unique_in[v]) {
                    (1, _) => {
                        // Found a loop: trim the tail leading into it.
                        let pos = path.iter().position(|&(u, _)| u == v).expect("loop vertex on path");
                        for &(u, _) in &path[..pos] {
                            state[u] = 2;
                        }
                        return Some(path[pos..].iter().map(|&(_, e)| e).collect());
                    }
                    (2, _) | (_, None) => {
                        for &(u, _) in &path {
                            state[u] = 2;
                        }
                        state[v] = if state[v] == 0 { 2 } else { state[v] };
                        break;
                    }
                    (0, Some(e)) => {
                        state[v] = 1;
                        path.push((v, e));
                        v = self.edges[e].src;
                    }
                    _ => unreachable!(),
                }
            }
        }
        None
    }

    /// Condition (L): every simple cycle has an entry.
    pub fn check_condition_l(&self) -> bool {
        self.condition_l_violation().is_none()
    }

    /// A vertex with exactly one return path, if any (the witness that
    /// Condition (K) fails).
    ///
    /// A return path based at `v` is a path from `v` back to `v` that meets
    /// `v` only at its endpoints; distinctness is as edge sequences. The
    /// count is 0, 1, or infinite-or-at-least-2, decided as follows: collect
    /// simple return paths (no repeated interior vertex) stopping at two;
    /// with exactly one simple return path, a second (non-simple) return
    /// path exists iff some interior vertex lies on a cycle avoiding `v`,
    /// since any return path is the simple one with such cycles spliced in.
    pub fn condition_k_violation(&self) -> Option<usize> {
        (0..self.vertices.len()).find(|&v| self.return_path_class(v) == 1)
    }

    /// Condition (K): no vertex has exactly one return path.
    pub fn check_condition_k(&self) -> bool {
        self.condition_k_violation().is_none()
    }

    /// 0, 1, or 2 for "at least two" return paths based at `v`.
    fn return_path_class(&self, v: usize) -> usize {
        let mut found: Vec<Vec<usize>> = Vec::new();
        // Depth-first over simple paths: walk range-to-source from v,
        // recording interior vertices, until v is reached again.
        let mut stack: Vec<(usize, VertexSet, Vec<usize>)> = vec![(v, VertexSet::EMPTY, Vec::new())];
        'search: while let Some((at, interior, path)) = stack.pop() {
            for &e in &self.incoming[at] {
                let next = self.edges[e].src;
                let mut longer = path.clone();
                longer.push(e);
                if next == v {
                    found.push(longer);
                    if found.len() == 2 {
                        break 'search;
                    }
                } else if !interior.contains(next) {
                    stack.push((next, interior.with(next), longer));
                }
            }
        }
        match found.len() {
            0 => 0,
            2 => 2,
            _ => {
                let interior: Vec<usize> =
                    found[0].iter().map(|&e| self.edges[e].src).filter(|&w| w != v).collect();
                let on_cycle = self.vertices_on_cycles_avoiding(v);
                if interior.iter().any(|&w| on_cycle.contains(w)) {
                    2
                } else {
                    1
                }
            }
        }
    }

    /// Vertices lying on some cycle of the graph with `avoid` deleted:
    /// those that can reach themselves in at least one traversal step.
    fn vertices_on_cycles_avoiding(&self, avoid: usize) -> VertexSet {
        let allowed = self.full_vertex_set().minus(VertexSet::singleton(avoid));
        let mut result = VertexSet::EMPTY;
        for w in allowed.iter() {
            let mut reached = VertexSet::EMPTY;
            let mut queue = vec![w];
            'bfs: while let Some(u) = queue.pop() {
                for &e in &self.incoming[u] {
                    let next = self.edges[e].src;
                    if next == w {
                        result = result.with(w);
                        break 'bfs;
                    }
                    if allowed.contains(next) && !reached.contains(next) {
                        reached = reached.with(next);
                        queue.push(next);
                    }
                }
            }
        }
        result
    }

    /// Quotient by a saturated hereditary set `h`: keeps the vertices
    /// outside `h` and the edges whose source is outside `h` (hereditarity
    /// guarantees no dangling ranges). The no-sources hypothesis is
    /// re-checked on the result and violations are reported, not assumed
    /// away.
    pub fn quotient(&self, h: VertexSet) -> Result<Quotient, GraphError> {
        if !self.is_sh(h) {
            return Err(GraphError::NotSaturatedHereditary(self.render_vertex_set(h)));
        }
        if h == self.full_vertex_set() {
            return Err(GraphError::EmptyQuotient);
        }
        let keep: Vec<usize> = (0..self.vertices.len()).filter(|&v| !h.contains(v)).collect();
        let vertices: Vec<String> = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        let old_to_new: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let edges: Vec<(String, String, String)> = self
            .edges
            .iter()
            .filter(|e| !h.contains(e.src))
            .map(|e| {
                debug_assert!(!h.contains(e.rng), "hereditarity must keep ranges outside h");
                (e.name.clone(), vertices[old_to_new[&e.src]].clone(), vertices[old_to_new[&e.rng]].clone())
            })
            .collect();
        let graph = Graph::new(vertices, edges)?;
        let new_sources = graph.sources().into_iter().map(|v| graph.vertices[v].clone()).collect();
        Ok(Quotient { graph, new_sources })
    }

    /// Condition (K) via the quotient characterization: every quotient by a
    /// proper saturated hereditary set (the empty set included) satisfies
    /// Condition (L).
    pub fn check_condition_k_via_quotients(&self) -> Result<bool, GraphError> {
        for h in self.enumerate_sh()? {
            if h == self.full_vertex_set() {
                continue;
            }
            if !self.quotient(h)?.graph.check_condition_l() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Computes singleton closures and tail-stability for every vertex.
    pub fn tail_analysis(&self) -> TailAnalysis {
        let sh: Vec<VertexSet> = (0..self.vertices.len()).map(|v| self.sh_closure(VertexSet::singleton(v))).collect();
        let mut stable = vec![false; self.vertices.len()];
        for v in 0..self.vertices.len() {
            let class = VertexSet::from_indices((0..self.vertices.len()).filter(|&u| sh[u] == sh[v]));
            // Inside the class, trim vertices with no traversal step that
            // stays in the class; survivors are exactly the vertices with an
            // infinite in-class walk, i.e. those reaching an in-class cycle.
            let mut alive = class;
            loop {
                let mut next = alive;
                for w in alive.iter() {
                    let has_step = self.incoming[w].iter().any(|&e| alive.contains(self.edges[e].src));
                    if !has_step {
                        next = next.minus(VertexSet::singleton(w));
                    }
                }
                if next == alive {
                    break;
                }
                alive = next;
            }
            stable[v] = alive.contains(v);
        }
        TailAnalysis { sh, stable }
    }

    /// The distinct tail values `{sh(w) : w ∈ h, w tail-stable}` of a
    /// saturated hereditary set, sorted.
    pub fn tails_of(&self, analysis: &TailAnalysis, h: VertexSet) -> Vec<VertexSet> {
        let mut tails: Vec<VertexSet> =
            h.iter().filter(|&w| w < self.vertices.len() && analysis.stable[w]).map(|w| analysis.sh[w]).collect();
        tails.sort_by_key(|s| (s.len(), s.bits()));
        tails.dedup();
        tails
    }

    /// Checks that an edge-index sequence is a path: indices in range and
    /// consecutive edges composable (`src(e_i) = rng(e_{i+1})`). The empty
    /// sequence is a path.
    pub fn validate_path(&self, path: &[usize]) -> Result<(), GraphError> {
        for &e in path {
            if e >= self.edges.len() {
                return Err(GraphError::InvalidPath(format!("edge index {e} out of range")));
            }
        }
        for pair in path.windows(2) {
            let (e, f) = (&self.edges[pair[0]], &self.edges[pair[1]]);
            if e.src != f.rng {
                return Err(GraphError::InvalidPath(format!(
                    "edge {} (source {}) cannot be followed by edge {} (range {})",
                    e.name,
                    self.vertices[e.src],
                    f.name,
                    self.vertices[f.rng]
                )));
            }
        }
        Ok(())
    }

    /// Source vertex of a nonempty path: the source of its last edge.
    pub fn path_source(&self, path: &[usize]) -> Option<usize> {
        path.last().map(|&e| self.edges[e].src)
    }

    /// Range vertex of a nonempty path: the range of its first edge.
    pub fn path_range(&self, path: &[usize]) -> Option<usize> {
        path.first().map(|&e| self.edges[e].rng)
    }

    /// Structural checks for a lasso path: nonempty closed cycle and
    /// range-to-source composability throughout.
    pub fn validate_lasso(&self, x: &LassoPath) -> Result<(), GraphError> {
        if x.cycle.is_empty() {
            return Err(GraphError::InvalidLasso("cycle part must be nonempty".into()));
        }
        let seq: Vec<usize> = x.stem.iter().chain(&x.cycle).copied().collect();
        self.validate_path(&seq).map_err(|e| match e {
            GraphError::InvalidPath(s) => GraphError::InvalidLasso(s),
            other => other,
        })?;
        let first = &self.edges[x.cycle[0]];
        let last = &self.edges[*x.cycle.last().expect("nonempty cycle")];
        if last.src != first.rng {
            return Err(GraphError::InvalidLasso(format!(
                "cycle is not closed: last edge {} ends at {} but the cycle starts at {}",
                last.name, self.vertices[last.src], self.vertices[first.rng]
            )));
        }
        Ok(())
    }

    /// The vertex the lasso is based at.
    pub fn lasso_base(&self, x: &LassoPath) -> usize {
        let first = x.stem.first().or(x.cycle.first()).expect("validated lasso");
        self.edges[*first].rng
    }

    /// Vertices visited by the cycle part.
    pub fn lasso_cycle_vertices(&self, x: &LassoPath) -> VertexSet {
        x.cycle.iter().fold(VertexSet::EMPTY, |s, &e| s.with(self.edges[e].rng).with(self.edges[e].src))
    }

    /// Whether the tail of the lasso eventually stays inside `h`: true iff
    /// every cycle vertex lies in `h`.
    pub fn lasso_in_uh(&self, x: &LassoPath, h: VertexSet) -> bool {
        self.lasso_cycle_vertices(x).is_subset(h)
    }

    /// The stabilized singleton closure along the lasso: `sh({w})` for the
    /// cycle vertices `w` (constant around a cycle, since closures only
    /// shrink along a traversal step and the cycle returns).
    pub fn lasso_sh_limit(&self, x: &LassoPath) -> VertexSet {
        let mut limits = self.lasso_cycle_vertices(x).iter().map(|w| self.sh_closure(VertexSet::singleton(w)));
        let first = limits.next().expect("nonempty cycle");
        debug_assert!(limits.all(|l| l == first), "singleton closure must be constant on a cycle");
        first
    }

    /// Whether two lassos have a common shift, i.e. describe tails of the
    /// same infinite path up to finite delay. Shifting can consume both
    /// stems entirely, so this holds exactly when the primitive cycles are
    /// rotations of each other.
    pub fn lasso_tail_equivalent(&self, x: &LassoPath, y: &LassoPath) -> bool {
        let a = primitive_cycle(&x.cycle);
        let b = primitive_cycle(&y.cycle);
        if a.len() != b.len() {
            return false;
        }
        let doubled: Vec<usize> = a.iter().chain(a.iter()).copied().collect();
        doubled.windows(b.len()).any(|w| w == b.as_slice())
    }

    /// A lasso witnessing tail-stability of `v`: a walk from `v` inside its
    /// closure class into a cycle of that class. `None` if `v` is not
    /// tail-stable.
    pub fn tail_witness_lasso(&self, v: usize) -> Option<LassoPath> {
        let analysis = self.tail_analysis();
        if !analysis.stable[v] {
            return None;
        }
        let class = VertexSet::from_indices((0..self.vertices.len()).filter(|&u| analysis.sh[u] == analysis.sh[v]));
        // Greedily walk inside the stable part of the class; a vertex must
        // repeat within |class| + 1 steps, closing the cycle.
        let stable_part =
            VertexSet::from_indices(class.iter().filter(|&u| analysis.stable[u] && analysis.sh[u] == analysis.sh[v]));
        let mut walk_vertices = vec![v];
        let mut walk_edges = Vec::new();
        let mut at = v;
        loop {
            let e = *self.incoming[at]
                .iter()
                .find(|&&e| stable_part.contains(self.edges[e].src))
                .expect("stable vertices always have a stable traversal step");
            let next = self.edges[e].src;
            walk_edges.push(e);
            if let Some(pos) = walk_vertices.iter().position(|&u| u == next) {
                return Some(LassoPath {
                    stem: walk_edges[..pos].to_vec(),
                    cycle: walk_edges[pos..].to_vec(),
                });
            }
            walk_vertices.push(next);
            at = next;
        }
    }
}

/// The smallest repeating block of a cycle's edge sequence.
fn primitive_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    for p in 1..=n {
        if n % p == 0 && cycle.chunks(p).all(|c| c == &cycle[..p]) {
            return cycle[..p].to_vec();
        }
    }
    cycle.to_vec()
}

/// The lattice of saturated hereditary vertex sets of a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShLattice {
    members: Vec<VertexSet>,
}

impl ShLattice {
    /// Enumerates the lattice (see [`Graph::enumerate_sh`] for the budget).
    pub fn compute(graph: &Graph) -> Result<ShLattice, GraphError> {
        Ok(ShLattice { members: graph.enumerate_sh()? })
    }

    /// Members sorted by size then mask; index 0 is the empty set.
    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    /// Index of `set` among the members.
    pub fn index_of(&self, set: VertexSet) -> Option<usize> {
        self.members.iter().position(|&m| m == set)
    }

    /// Covering pairs `(lower, upper)` of the Hasse diagram, as indices.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                if a == b || !a.is_subset(b) {
                    continue;
                }
                let strictly_between = self
                    .members
                    .iter()
                    .any(|&c| c != a && c != b && a.is_subset(c) && c.is_subset(b));
                if !strictly_between {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn closure_on_two_vertex_chain() {
        let g = catalog::two_vertex_chain();
        let v0 = g.vertex_index("v0").unwrap();
        let v1 = g.vertex_index("v1").unwrap();
        // Pulling in v0 drags v1 along (hereditary step across the chain edge).
        assert_eq!(g.sh_closure(VertexSet::singleton(v0)), g.full_vertex_set());
        // v1 alone is already saturated hereditary.
        assert_eq!(g.sh_closure(VertexSet::singleton(v1)), VertexSet::singleton(v1));
        let lattice = g.enumerate_sh().unwrap();
        assert_eq!(
            lattice,
            vec![VertexSet::EMPTY, VertexSet::singleton(v1), g.full_vertex_set()]
        );
    }

    #[test]
    fn closure_is_a_closure_operator() {
        let g = catalog::loop_augmented_tree();
        for seed_bits in 0..(1u64 << g.vertex_count()) {
            let seed = VertexSet(seed_bits);
            let c = g.sh_closure(seed);
            assert!(seed.is_subset(c));
            assert_eq!(g.sh_closure(c), c, "idempotence");
        }
    }

    #[test]
    fn sh_enumeration_matches_exhaustive_check() {
        for (name, g) in catalog::all_graphs() {
            if g.vertex_count() > 10 {
                continue;
            }
            let listed = g.enumerate_sh().unwrap();
            let exhaustive: Vec<VertexSet> = (0..(1u64 << g.vertex_count()))
                .map(VertexSet)
                .filter(|&s| g.is_sh(s))
                .collect();
            assert_eq!(listed.len(), exhaustive.len(), "{name}");
            for s in exhaustive {
                assert!(listed.contains(&s), "{name}: missing {:?}", g.render_vertex_set(s));
            }
        }
    }

    #[test]
    fn tree_lattice_matches_leaf_subsets() {
        // For the loop-augmented depth-2 tree the saturated hereditary sets
        // correspond to arbitrary sets of leaves.
        let g = catalog::loop_augmented_tree();
        assert_eq!(g.enumerate_sh().unwrap().len(), 16);
    }

    #[test]
    fn conditions_on_fixtures() {
        let single = catalog::single_loop();
        assert!(!single.check_condition_l());
        assert!(!single.check_condition_k());
        assert!(single.condition_k_violation().is_some());

        let chain = catalog::two_vertex_chain();
        assert!(chain.check_condition_l());
        assert!(chain.check_condition_k());

        for m in 2..=4 {
            assert!(catalog::loop_chain(m).check_condition_k());
        }
        assert!(catalog::loop_augmented_tree().check_condition_k());
    }

    #[test]
    fn quotient_shapes() {
        let g = catalog::two_vertex_chain();
        let v1 = g.vertex_index("v1").unwrap();
        let q = g.quotient(VertexSet::singleton(v1)).unwrap();
        assert_eq!(q.graph.vertex_count(), 1);
        assert_eq!(q.graph.edge_count(), 2); // the two loops at v0 survive
        assert!(q.new_sources.is_empty());
        // Quotient by a non-SH set is refused.
        let v0 = g.vertex_index("v0").unwrap();
        assert!(matches!(
            g.quotient(VertexSet::singleton(v0)),
            Err(GraphError::NotSaturatedHereditary(_))
        ));
    }

    #[test]
    fn k_direct_equals_k_via_quotients_on_fixtures() {
        for (name, g) in catalog::all_graphs() {
            let direct = g.check_condition_k();
            let quotient = g.check_condition_k_via_quotients().unwrap();
            assert_eq!(direct, quotient, "{name}");
        }
    }

    #[test]
    fn tail_stability() {
        let g = catalog::two_vertex_chain();
        let analysis = g.tail_analysis();
        assert!(analysis.stable.iter().all(|&s| s), "both chain vertices are tail-stable");

        let g = catalog::shrinking_vertex();
        let w = g.vertex_index("w").unwrap();
        let analysis = g.tail_analysis();
        assert!(!analysis.stable[w], "every traversal step away from w strictly shrinks its closure");
        assert!(analysis.stable[g.vertex_index("u1").unwrap()]);
    }

    #[test]
    fn tails_decompose_joins() {
        // Tail values of a join are the union of the tail values: checked
        // exhaustively on the fixture graphs.
        for (name, g) in catalog::all_graphs() {
            let analysis = g.tail_analysis();
            let lattice = g.enumerate_sh().unwrap();
            for &a in &lattice {
                for &b in &lattice {
                    let join = g.sh_closure(a.union(b));
                    let mut expect = g.tails_of(&analysis, a);
                    expect.extend(g.tails_of(&analysis, b));
                    expect.sort_by_key(|s| (s.len(), s.bits()));
                    expect.dedup();
                    assert_eq!(g.tails_of(&analysis, join), expect, "{name}");
                }
            }
        }
    }

    #[test]
    fn lasso_validation_and_limits() {
        let g = catalog::two_vertex_chain();
        let l0 = g.edge_index("l0a").unwrap();
        let chain = g.edge_index("c").unwrap();
        let l1 = g.edge_index("l1a").unwrap();
        // Stem: loop at v0 then chain edge to v1... traversal starts at
        // rng(l0a) = v0; after the chain edge (rng v0, src v1) we sit at v1.
        let x = LassoPath { stem: vec![l0, chain], cycle: vec![l1] };
        g.validate_lasso(&x).unwrap();
        assert_eq!(g.lasso_base(&x), g.vertex_index("v0").unwrap());
        let v1 = g.vertex_index("v1").unwrap();
        assert_eq!(g.lasso_sh_limit(&x), VertexSet::singleton(v1));
        assert!(g.lasso_in_uh(&x, VertexSet::singleton(v1)));
        assert!(!g.lasso_in_uh(&LassoPath { stem: vec![], cycle: vec![l0] }, VertexSet::singleton(v1)));

        // Non-composable stem/cycle junctions are rejected.
        let bad = LassoPath { stem: vec![chain], cycle: vec![l0] };
        assert!(g.validate_lasso(&bad).is_err());
        let empty = LassoPath { stem: vec![], cycle: vec![] };
        assert!(g.validate_lasso(&empty).is_err());
    }

    #[test]
    fn lasso_tail_equivalence() {
        let g = catalog::two_vertex_chain();
        let l0a = g.edge_index("l0a").unwrap();
        let l0b = g.edge_index("l0b").unwrap();
        let l1 = g.edge_index("l1a").unwrap();
        let x = LassoPath { stem: vec![], cycle: vec![l0a] };
        // Same cycle reached after a shift of itself.
        let shifted = LassoPath { stem: vec![l0a], cycle: vec![l0a] };
        assert!(g.lasso_tail_equivalent(&x, &shifted));
        // Doubling the cycle block changes nothing.
        let doubled = LassoPath { stem: vec![], cycle: vec![l0a, l0a] };
        assert!(g.lasso_tail_equivalent(&x, &doubled));
        // Alternating loops differ from a single loop.
        let alternating = LassoPath { stem: vec![], cycle: vec![l0a, l0b] };
        assert!(!g.lasso_tail_equivalent(&x, &alternating));
        // Rotations of the alternating cycle agree.
        let rotated = LassoPath { stem: vec![], cycle: vec![l0b, l0a] };
        assert!(g.lasso_tail_equivalent(&alternating, &rotated));
        // Cycles at different vertices are inequivalent.
        let other = LassoPath { stem: vec![], cycle: vec![l1] };
        assert!(!g.lasso_tail_equivalent(&x, &other));
    }

    #[test]
    fn witness_lassos_reach_the_right_class() {
        for (name, g) in catalog::all_graphs() {
            let analysis = g.tail_analysis();
            for v in 0..g.vertex_count() {
                match g.tail_witness_lasso(v) {
                    Some(x) => {
                        assert!(analysis.stable[v], "{name}: witness for unstable vertex");
                        g.validate_lasso(&x).unwrap();
                        assert_eq!(g.lasso_base(&x), v, "{name}");
                        assert_eq!(g.lasso_sh_limit(&x), analysis.sh[v], "{name}");
                    }
                    None => assert!(!analysis.stable[v], "{name}: stable vertex lacks witness"),
                }
            }
        }
    }

    #[test]
    fn hasse_covers_on_chain_lattice() {
        let g = catalog::loop_chain(3);
        let lattice = ShLattice::compute(&g).unwrap();
        assert_eq!(lattice.members().len(), 4);
        let covers = lattice.covers();
        assert_eq!(covers.len(), 3, "a chain has one cover per step");
    }
}
