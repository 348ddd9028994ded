//! Ready-made groupoids and graphs used by tests, examples, and the
//! exhaustive cross-checks.
//!
//! The groupoid constructors produce already-valid structures (each is
//! re-validated in tests). Principal groupoids are built from their orbit
//! sizes; the graph fixtures cover the behaviors the lattice theory cares
//! about: chains, trees with leaf loops, entryless cycles, and a vertex
//! whose singleton closure strictly shrinks along every traversal step.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::groupoid::{Arrow, FiniteGroupoid};

/// The principal groupoid with the given orbit sizes: units `u0, u1, ...`
/// numbered across all orbits, and for each orbit exactly one morphism
/// `m{i}_{j}` from `u{j}` to `u{i}` per ordered pair of distinct units in
/// the orbit.
pub fn principal(orbit_sizes: &[usize]) -> FiniteGroupoid {
    let total: usize = orbit_sizes.iter().sum();
    let units: Vec<String> = (0..total).map(|k| format!("u{k}")).collect();
    let mut arrows = Vec::new();
    let mut compositions = Vec::new();
    let mut base = 0;
    for &size in orbit_sizes {
        let members: Vec<usize> = (base..base + size).collect();
        for &i in &members {
            for &j in &members {
                if i != j {
                    arrows.push(Arrow {
                        name: format!("m{i}_{j}"),
                        src: format!("u{j}"),
                        rng: format!("u{i}"),
                        inv: format!("m{j}_{i}"),
                    });
                }
            }
        }
        for &i in &members {
            for &j in &members {
                for &k in &members {
                    if i == j || j == k {
                        continue;
                    }
                    let product = if i == k { format!("u{i}") } else { format!("m{i}_{k}") };
                    compositions.push((format!("m{i}_{j}"), format!("m{j}_{k}"), product));
                }
            }
        }
        base += size;
    }
    FiniteGroupoid::new(units, arrows, compositions).expect("principal groupoids are well-formed")
}

/// One unit, no other morphisms.
pub fn trivial() -> FiniteGroupoid {
    principal(&[1])
}

/// `n` units, no other morphisms.
pub fn discrete(n: usize) -> FiniteGroupoid {
    principal(&vec![1; n])
}

/// Two units joined by a single pair of mutually inverse morphisms.
pub fn two_units_one_orbit() -> FiniteGroupoid {
    principal(&[2])
}

/// A two-unit orbit next to an isolated unit.
pub fn pair_orbit_plus_point() -> FiniteGroupoid {
    principal(&[2, 1])
}

/// The cyclic group of order `k` viewed as a one-unit groupoid: unit `e`,
/// morphisms `g1, ..., g{k-1}` with `gi ∘ gj = g{(i+j) mod k}`.
pub fn cyclic_group(k: usize) -> FiniteGroupoid {
    assert!(k >= 1);
    let name = |i: usize| if i == 0 { "e".to_string() } else { format!("g{i}") };
    let arrows: Vec<Arrow> = (1..k)
        .map(|i| Arrow { name: name(i), src: "e".into(), rng: "e".into(), inv: name(k - i) })
        .collect();
    let mut compositions = Vec::new();
    for i in 1..k {
        for j in 1..k {
            compositions.push((name(i), name(j), name((i + j) % k)));
        }
    }
    FiniteGroupoid::new(vec!["e".into()], arrows, compositions).expect("cyclic groups are well-formed")
}

/// A unit carrying a 2-element isotropy group next to an isolated unit:
/// two orbits, not effective.
pub fn isotropy_plus_point() -> FiniteGroupoid {
    FiniteGroupoid::new(
        vec!["u0".into(), "u1".into()],
        vec![Arrow { name: "g".into(), src: "u0".into(), rng: "u0".into(), inv: "g".into() }],
        vec![("g".into(), "g".into(), "u0".into())],
    )
    .expect("well-formed")
}

/// Every groupoid fixture, with a short name for test diagnostics.
pub fn all_groupoids() -> Vec<(String, FiniteGroupoid)> {
    vec![
        ("trivial".into(), trivial()),
        ("discrete3".into(), discrete(3)),
        ("pair_orbit".into(), two_units_one_orbit()),
        ("pair_plus_point".into(), pair_orbit_plus_point()),
        ("principal3".into(), principal(&[3])),
        ("principal22".into(), principal(&[2, 2])),
        ("z2".into(), cyclic_group(2)),
        ("z3".into(), cyclic_group(3)),
        ("isotropy_plus_point".into(), isotropy_plus_point()),
    ]
}

/// Principal groupoids small enough for full algebra-ideal enumeration
/// (at most 6 morphisms each).
pub fn enumeration_catalog() -> Vec<(String, FiniteGroupoid)> {
    [&[1][..], &[1, 1], &[1, 1, 1], &[2], &[2, 1], &[2, 1, 1]]
        .iter()
        .map(|sizes| {
            let label = sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("+");
            (format!("principal[{label}]"), principal(sizes))
        })
        .collect()
}

fn graph(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Graph {
    Graph::new(
        vertices.iter().map(|v| v.to_string()).collect(),
        edges.iter().map(|(n, s, r)| (n.to_string(), s.to_string(), r.to_string())).collect(),
    )
    .expect("catalog graphs are well-formed")
}

/// Two vertices, two loops each, one edge from `v1` to `v0` (so traversal
/// runs `v0 -> v1`). Saturated hereditary sets: `∅`, `{v1}`, everything.
pub fn two_vertex_chain() -> Graph {
    graph(
        &["v0", "v1"],
        &[
            ("l0a", "v0", "v0"),
            ("l0b", "v0", "v0"),
            ("l1a", "v1", "v1"),
            ("l1b", "v1", "v1"),
            ("c", "v1", "v0"),
        ],
    )
}

/// Two vertices, two loops each, no connecting edge: the four saturated
/// hereditary sets are the vertex subsets.
pub fn two_isolated_loops() -> Graph {
    graph(
        &["v0", "v1"],
        &[("l0a", "v0", "v0"), ("l0b", "v0", "v0"), ("l1a", "v1", "v1"), ("l1b", "v1", "v1")],
    )
}

/// One vertex with a single loop: fails Conditions (L) and (K).
pub fn single_loop() -> Graph {
    graph(&["v"], &[("e", "v", "v")])
}

/// One vertex with two loops.
pub fn rose_two_petals() -> Graph {
    graph(&["v"], &[("a", "v", "v"), ("b", "v", "v")])
}

/// `m` vertices in a chain, two loops per vertex, chain edges pointing
/// `w{i+1} -> w{i}` in source-to-range terms. The saturated hereditary
/// lattice is a chain with `m + 1` members.
pub fn loop_chain(m: usize) -> Graph {
    assert!(m >= 1);
    let names: Vec<String> = (0..m).map(|i| format!("w{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((format!("p{i}"), names[i].clone(), names[i].clone()));
        edges.push((format!("q{i}"), names[i].clone(), names[i].clone()));
        if i + 1 < m {
            edges.push((format!("c{i}"), names[i + 1].clone(), names[i].clone()));
        }
    }
    Graph::new(names, edges).expect("well-formed")
}

/// Depth-2 binary tree traversed root-to-leaf, two loops on each leaf.
/// Saturated hereditary sets correspond to the 16 leaf subsets.
pub fn loop_augmented_tree() -> Graph {
    graph(
        &["r", "a", "b", "aa", "ab", "ba", "bb"],
        &[
            ("ea", "a", "r"),
            ("eb", "b", "r"),
            ("eaa", "aa", "a"),
            ("eab", "ab", "a"),
            ("eba", "ba", "b"),
            ("ebb", "bb", "b"),
            ("laa1", "aa", "aa"),
            ("laa2", "aa", "aa"),
            ("lab1", "ab", "ab"),
            ("lab2", "ab", "ab"),
            ("lba1", "ba", "ba"),
            ("lba2", "ba", "ba"),
            ("lbb1", "bb", "bb"),
            ("lbb2", "bb", "bb"),
        ],
    )
}

/// Two looped vertices both feeding a third vertex `w`. The closure of
/// `{w}` is everything while every traversal step out of `w` lands in a
/// strictly smaller closure, so `w` is not tail-stable.
pub fn shrinking_vertex() -> Graph {
    graph(
        &["u1", "u2", "w"],
        &[
            ("l1a", "u1", "u1"),
            ("l1b", "u1", "u1"),
            ("l2a", "u2", "u2"),
            ("l2b", "u2", "u2"),
            ("d1", "u1", "w"),
            ("d2", "u2", "w"),
        ],
    )
}

/// A 2-cycle with an entry from a doubly-looped vertex `t`: satisfies
/// Condition (L) but not Condition (K) (each cycle vertex has exactly one
/// return path).
pub fn entered_two_cycle() -> Graph {
    graph(
        &["v0", "v1", "t"],
        &[
            ("c01", "v1", "v0"),
            ("c10", "v0", "v1"),
            ("et", "t", "v0"),
            ("ta", "t", "t"),
            ("tb", "t", "t"),
        ],
    )
}

/// Every graph fixture, with a short name for test diagnostics.
pub fn all_graphs() -> Vec<(String, Graph)> {
    vec![
        ("two_vertex_chain".into(), two_vertex_chain()),
        ("two_isolated_loops".into(), two_isolated_loops()),
        ("single_loop".into(), single_loop()),
        ("rose_two_petals".into(), rose_two_petals()),
        ("loop_chain2".into(), loop_chain(2)),
        ("loop_chain3".into(), loop_chain(3)),
        ("loop_augmented_tree".into(), loop_augmented_tree()),
        ("shrinking_vertex".into(), shrinking_vertex()),
        ("entered_two_cycle".into(), entered_two_cycle()),
    ]
}
