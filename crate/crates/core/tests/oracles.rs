//! Brute-force oracles. Everything here recomputes library answers from
//! first principles — raw element sets, exhaustive subset sweeps, direct
//! path searches — and compares exactly. None of the checking paths reuse
//! the canonical-basis code they validate.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use steinberg_core::algebra::SteinbergAlgebra;
use steinberg_core::catalog;
use steinberg_core::graph::{Graph, VertexSet};
use steinberg_core::groupoid::FiniteGroupoid;
use steinberg_core::howell::ModBasis;
use steinberg_core::ring::{divisors, RIdeal, RingElement, RingSpec};

/// All coefficient vectors of length `m` over `Z/n`.
fn all_vectors(n: u64, m: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Two-sided ideals of the convolution algebra over `Z/n`, found by sweeping
/// every subset of the element set and keeping those closed under addition
/// and one-sided convolution by every basis vector. Feasible only for
/// algebras with at most 16 elements.
fn brute_force_ideals(g: &FiniteGroupoid, n: u64) -> BTreeSet<BTreeSet<Vec<u64>>> {
    let m = g.morphism_count();
    let elements = all_vectors(n, m);
    assert!(elements.len() <= 16, "brute force needs a tiny algebra");
    let index = |v: &Vec<u64>| elements.iter().position(|w| w == v).unwrap();
    let add = |a: &Vec<u64>, b: &Vec<u64>| -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % n).collect()
    };
    let conv_single = |s: usize, v: &Vec<u64>, left: bool| -> Vec<u64> {
        let mut out = vec![0; m];
        for a in 0..m {
            for b in 0..m {
                if let Some(ab) = g.compose(a, b) {
                    let (unit_slot, coeff_slot) = if left { (a, b) } else { (b, a) };
                    if unit_slot == s {
                        out[ab] = (out[ab] + v[coeff_slot]) % n;
                    }
                }
            }
        }
        out
    };
    let mut ideals = BTreeSet::new();
    for mask in 0u32..(1 << elements.len()) {
        if mask & 1 == 0 {
            continue; // must contain zero, which is element index 0
        }
        let members: Vec<&Vec<u64>> = (0..elements.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| &elements[i])
            .collect();
        let closed = members.iter().all(|v| {
            members.iter().all(|w| mask >> index(&add(v, w)) & 1 == 1)
                && (0..m).all(|s| {
                    mask >> index(&conv_single(s, v, true)) & 1 == 1
                        && mask >> index(&conv_single(s, v, false)) & 1 == 1
                })
        });
        if closed {
            ideals.insert(members.into_iter().cloned().collect());
        }
    }
    ideals
}

#[test]
fn ideal_enumeration_agrees_with_raw_subset_sweep() {
    let cases: Vec<(FiniteGroupoid, u64)> = vec![
        (catalog::trivial(), 4),
        (catalog::trivial(), 8),
        (catalog::discrete(2), 2),
        (catalog::cyclic_group(2), 2),
        (catalog::principal(&[2]), 2),
        (catalog::cyclic_group(3), 2),
        (catalog::isotropy_plus_point(), 2),
    ];
    for (g, n) in cases {
        let brute = brute_force_ideals(&g, n);
        let alg = SteinbergAlgebra::new(&g, RingSpec::Zmod(n)).unwrap();
        let enumerated: BTreeSet<BTreeSet<Vec<u64>>> = alg
            .enumerate_all_ideals()
            .unwrap()
            .iter()
            .map(|i| i.factors()[0].elements().into_iter().collect())
            .collect();
        assert_eq!(enumerated, brute, "{:?} over Z/{n}", g);
    }
}

#[test]
fn ring_arithmetic_matches_componentwise_recomputation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let spec = RingSpec::Product(vec![RingSpec::Zmod(4), RingSpec::Zmod(3), RingSpec::Zmod(8)]);
    let moduli = [4u64, 3, 8];
    for _ in 0..10_000 {
        let a: Vec<u64> = moduli.iter().map(|&n| rng.gen_range(0..n)).collect();
        let b: Vec<u64> = moduli.iter().map(|&n| rng.gen_range(0..n)).collect();
        let ea = RingElement::Tuple(a.iter().map(|&x| RingElement::Mod(x)).collect());
        let eb = RingElement::Tuple(b.iter().map(|&x| RingElement::Mod(x)).collect());
        let sum = spec.add(&ea, &eb);
        let prod = spec.mul(&ea, &eb);
        let want_sum = RingElement::Tuple(
            a.iter().zip(&b).zip(&moduli).map(|((&x, &y), &n)| RingElement::Mod((x + y) % n)).collect(),
        );
        let want_prod = RingElement::Tuple(
            a.iter().zip(&b).zip(&moduli).map(|((&x, &y), &n)| RingElement::Mod(x * y % n)).collect(),
        );
        assert_eq!(sum, want_sum);
        assert_eq!(prod, want_prod);
        assert_eq!(spec.add(&ea, &spec.neg(&ea)), spec.zero());
    }
}

#[test]
fn ring_ideal_lattice_matches_element_sets() {
    for n in [2u64, 3, 4, 6, 8, 12, 30] {
        let spec = RingSpec::Zmod(n);
        let elements = |i: &RIdeal| -> BTreeSet<u64> {
            (0..n).filter(|&x| i.contains_element(&RingElement::Mod(x))).collect()
        };
        let ideals = spec.enumerate_ideals().unwrap();
        assert_eq!(ideals.len(), divisors(n).len());
        for i in &ideals {
            for j in &ideals {
                let ei = elements(i);
                let ej = elements(j);
                let sum_set: BTreeSet<u64> = ei
                    .iter()
                    .flat_map(|&x| ej.iter().map(move |&y| (x + y) % n))
                    .collect();
                assert_eq!(elements(&i.sum(j)), sum_set);
                let inter_set: BTreeSet<u64> = ei.intersection(&ej).copied().collect();
                assert_eq!(elements(&i.intersect(j)), inter_set);
                assert_eq!(i.contains_ideal(j), ej.is_subset(&ei));
            }
        }
    }
}

/// The span of `rows` in `(Z/n)^cols` computed by closing under addition of
/// generators, one at a time.
fn brute_span(n: u64, cols: usize, rows: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
    let mut span: BTreeSet<Vec<u64>> = BTreeSet::new();
    span.insert(vec![0; cols]);
    loop {
        let mut grew = false;
        let snapshot: Vec<Vec<u64>> = span.iter().cloned().collect();
        for v in &snapshot {
            for r in rows {
                let w: Vec<u64> = v.iter().zip(r).map(|(&x, &y)| (x + y) % n).collect();
                grew |= span.insert(w);
            }
        }
        if !grew {
            return span;
        }
    }
}

#[test]
fn canonical_module_bases_match_brute_force_spans() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..2_000 {
        let n = [2u64, 3, 4, 6, 8, 12][rng.gen_range(0..6)];
        let cols = rng.gen_range(1..=4);
        let row_count = rng.gen_range(0..=3);
        let rows: Vec<Vec<u64>> =
            (0..row_count).map(|_| (0..cols).map(|_| rng.gen_range(0..n)).collect()).collect();
        let basis = ModBasis::from_rows(n, cols, rows.clone());
        let brute = brute_span(n, cols, &rows);
        let listed: BTreeSet<Vec<u64>> = basis.elements().into_iter().collect();
        assert_eq!(listed, brute);
        assert_eq!(basis.element_count() as usize, brute.len());
        // Membership must agree on arbitrary probes.
        for _ in 0..5 {
            let probe: Vec<u64> = (0..cols).map(|_| rng.gen_range(0..n)).collect();
            assert_eq!(basis.contains(&probe), brute.contains(&probe));
        }
        // Sum and intersection against set recomputation.
        let other_rows: Vec<Vec<u64>> =
            (0..rng.gen_range(0..=2)).map(|_| (0..cols).map(|_| rng.gen_range(0..n)).collect()).collect();
        let other = ModBasis::from_rows(n, cols, other_rows.clone());
        let other_brute = brute_span(n, cols, &other_rows);
        let mut union_rows = rows.clone();
        union_rows.extend(other_rows.clone());
        assert_eq!(
            basis.sum(&other).elements().into_iter().collect::<BTreeSet<_>>(),
            brute_span(n, cols, &union_rows)
        );
        assert_eq!(
            basis.intersect(&other).elements().into_iter().collect::<BTreeSet<_>>(),
            brute.intersection(&other_brute).cloned().collect::<BTreeSet<_>>()
        );
    }
}

fn random_graph(rng: &mut ChaCha8Rng, max_v: usize, max_e: usize) -> Graph {
    let v = rng.gen_range(1..=max_v);
    let e = rng.gen_range(0..=max_e);
    let vertices: Vec<String> = (0..v).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = (0..e)
        .map(|i| {
            (format!("e{i}"), format!("v{}", rng.gen_range(0..v)), format!("v{}", rng.gen_range(0..v)))
        })
        .collect();
    Graph::new(vertices, edges).unwrap()
}

/// Hereditary-and-saturated, checked straight off the definitions.
fn is_sh_by_definition(g: &Graph, h: VertexSet) -> bool {
    let hereditary = (0..g.edge_count()).all(|e| {
        let edge = g.edge(e);
        !h.contains(edge.rng) || h.contains(edge.src)
    });
    let saturated = (0..g.vertex_count()).all(|v| {
        let incoming = g.incoming(v);
        incoming.is_empty()
            || h.contains(v)
            || !incoming.iter().all(|&e| h.contains(g.edge(e).src))
    });
    hereditary && saturated
}

#[test]
fn sh_lattice_agrees_with_definition_sweep_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 6, 10);
        let v = g.vertex_count();
        let brute: BTreeSet<u64> = (0..(1u64 << v))
            .filter(|&bits| is_sh_by_definition(&g, VertexSet::from_bits(bits)))
            .collect();
        let listed: BTreeSet<u64> =
            g.enumerate_sh().unwrap().into_iter().map(|s| s.bits()).collect();
        assert_eq!(listed, brute);
        // The closure of a random seed is the least member above it.
        let seed = VertexSet::from_bits(rng.gen_range(0..(1u64 << v)));
        let closure = g.sh_closure(seed);
        assert!(is_sh_by_definition(&g, closure));
        let least = brute
            .iter()
            .copied()
            .filter(|&bits| seed.bits() & bits == seed.bits())
            .min_by_key(|&bits| bits.count_ones())
            .unwrap();
        assert_eq!(closure.bits().count_ones(), least.count_ones());
        assert!(seed.is_subset(VertexSet::from_bits(least)));
    }
}

/// Every simple cycle through `start`, as edge lists, found by plain DFS.
fn simple_cycles_through(g: &Graph, start: usize) -> Vec<Vec<usize>> {
    // Walks run range → source, matching the library's path convention.
    let mut found = Vec::new();
    let mut stack = vec![(start, Vec::new(), VertexSet::EMPTY.with(start))];
    while let Some((at, path, seen)) = stack.pop() {
        for e in 0..g.edge_count() {
            if g.edge(e).rng != at {
                continue;
            }
            let next = g.edge(e).src;
            let mut longer = path.clone();
            longer.push(e);
            if next == start {
                found.push(longer);
            } else if !seen.contains(next) {
                stack.push((next, longer, seen.with(next)));
            }
        }
    }
    found
}

#[test]
fn cycle_conditions_agree_with_direct_cycle_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 6, 9);
        // Every-cycle-has-an-entry, by inspecting each simple cycle found by
        // search: an entry is an extra edge into some cycle vertex.
        let mut all_cycles = Vec::new();
        for v in 0..g.vertex_count() {
            for c in simple_cycles_through(&g, v) {
                // Keep one copy of each cycle: the rotation starting at its
                // smallest vertex, found when v is that vertex.
                if c.iter().map(|&e| g.edge(e).rng).min().unwrap() == v {
                    all_cycles.push(c);
                }
            }
        }
        let every_cycle_entered = all_cycles.iter().all(|cycle| {
            cycle.iter().any(|&e| {
                let v = g.edge(e).rng;
                (0..g.edge_count()).any(|f| f != e && g.edge(f).rng == v)
            })
        });
        assert_eq!(g.check_condition_l(), every_cycle_entered);

        // Return-path multiplicity at each vertex, recounted from the
        // exhaustive simple-return list. A vertex with one simple return
        // still has a second return path (with repeats) exactly when an
        // interior vertex closes a walk that never touches the base.
        let multiplicity_ok = (0..g.vertex_count()).all(|v| {
            let returns = simple_cycles_through(&g, v);
            returns.len() != 1 || {
                let closes_walk_avoiding = |w: usize| -> bool {
                    // Vertices reachable from w in one or more steps, never
                    // stepping onto v.
                    let mut reach = VertexSet::EMPTY;
                    let mut frontier = vec![w];
                    while let Some(u) = frontier.pop() {
                        for e in 0..g.edge_count() {
                            let s = g.edge(e).src;
                            if g.edge(e).rng == u && s != v && !reach.contains(s) {
                                reach = reach.with(s);
                                frontier.push(s);
                            }
                        }
                    }
                    reach.contains(w)
                };
                returns[0]
                    .iter()
                    .map(|&e| g.edge(e).src)
                    .filter(|&w| w != v)
                    .any(closes_walk_avoiding)
            }
        });
        assert_eq!(g.check_condition_k(), multiplicity_ok);
    }
}
