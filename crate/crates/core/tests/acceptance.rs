//! End-to-end checks of the library's headline guarantees. Each test covers
//! one release criterion and prints a single `[PASS]` line when it holds;
//! every comparison is exact.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use steinberg_core::algebra::SteinbergAlgebra;
use steinberg_core::catalog;
use steinberg_core::graph::{Graph, VertexSet};
use steinberg_core::pi::{CarrierLattice, PiFunction, PiViolation};
use steinberg_core::ring::{divisors, RIdeal, RingSpec};

fn int_pi(carrier: &CarrierLattice, gens: &[i64]) -> PiFunction {
    PiFunction::new(
        RingSpec::Z,
        gens.iter().map(|&g| RIdeal::integer(g)).collect(),
        carrier,
    )
    .unwrap()
}

#[test]
fn c01_two_point_integer_example() {
    let g = catalog::discrete(2);
    let carrier = CarrierLattice::from_groupoid(&g).unwrap();
    // Members in order: ∅, {u0}, {u1}, {u0,u1}.
    let pi1 = int_pi(&carrier, &[2, 3, 6]);
    let pi2 = int_pi(&carrier, &[3, 5, 15]);
    assert!(pi1.is_valid(&carrier) && pi2.is_valid(&carrier));
    assert_eq!(pi1.atom_profile(&carrier), vec![RIdeal::integer(2), RIdeal::integer(3)]);
    assert_eq!(pi2.atom_profile(&carrier), vec![RIdeal::integer(3), RIdeal::integer(5)]);

    // The least valid upper bound collapses to the unit ideal everywhere.
    let join = pi1.join(&pi2, &carrier).unwrap();
    assert_eq!(join.values(), &[RIdeal::integer(1), RIdeal::integer(1), RIdeal::integer(1)]);

    // The pointwise sum gives 3Z on the whole unit space and is not valid.
    let pointwise: Vec<RIdeal> =
        (1..carrier.member_count()).map(|i| pi1.value(i).sum(pi2.value(i))).collect();
    assert_eq!(pointwise, vec![RIdeal::integer(1), RIdeal::integer(1), RIdeal::integer(3)]);
    let pointwise = PiFunction::new(RingSpec::Z, pointwise, &carrier).unwrap();
    let violations = pointwise.validate(&carrier);
    assert!(violations.iter().any(|v| matches!(v, PiViolation::JoinLaw { .. })));
    println!(
        "[PASS] 01 two-point integer example: atom profiles 2Z⊕3Z and 3Z⊕5Z, join ≡ Z, pointwise sum (3Z at the top) rejected"
    );
}

fn catalog_rings() -> Vec<RingSpec> {
    vec![RingSpec::Zmod(2), RingSpec::Zmod(3), RingSpec::Zmod(4), RingSpec::Zmod(8)]
}

#[test]
fn c02_ideal_lattices_match_the_valid_function_lattices() {
    let groupoids = catalog::enumeration_catalog();
    assert!(groupoids.len() >= 6);
    for (label, g) in &groupoids {
        let orbits = g.orbits().len();
        let carrier = CarrierLattice::from_groupoid(g).unwrap();
        for ring in catalog_rings() {
            let alg = SteinbergAlgebra::new(g, ring.clone()).unwrap();
            let enumerated: BTreeSet<_> =
                alg.enumerate_all_ideals().unwrap().into_iter().collect();
            let functions = PiFunction::enumerate_valid(&ring, &carrier).unwrap();
            let realized: Vec<_> = functions
                .iter()
                .map(|pi| alg.realize_gamma(&carrier, pi).unwrap())
                .collect();
            let realized_set: BTreeSet<_> = realized.iter().cloned().collect();
            assert_eq!(realized_set.len(), realized.len(), "{label}/{ring}: not injective");
            assert_eq!(realized_set, enumerated, "{label}/{ring}: not surjective");
            let expected = ring.enumerate_ideals().unwrap().len().pow(orbits as u32);
            assert_eq!(enumerated.len(), expected, "{label}/{ring}: count");
        }
    }
    let two_points = catalog::discrete(2);
    let alg = SteinbergAlgebra::new(&two_points, RingSpec::Zmod(4)).unwrap();
    assert_eq!(alg.enumerate_all_ideals().unwrap().len(), 9);
    println!(
        "[PASS] 02 ideal lattice bijection on {} principal groupoids × (F2, F3, Z/4, Z/8): counts = ∏ per-orbit ring-ideal counts; two isolated units over Z/4 give 9",
        groupoids.len()
    );
}

#[test]
fn c03_basic_ideals_are_the_open_support_ideals() {
    for (label, g) in catalog::enumeration_catalog() {
        let opens = g.invariant_open_sets().unwrap();
        for ring in catalog_rings() {
            let alg = SteinbergAlgebra::new(&g, ring.clone()).unwrap();
            let open_ideals: Vec<_> =
                opens.iter().map(|u| alg.ideal_from_open(u).unwrap()).collect();
            let open_set: BTreeSet<_> = open_ideals.iter().cloned().collect();
            let basics: BTreeSet<_> = alg
                .enumerate_all_ideals()
                .unwrap()
                .into_iter()
                .filter(|i| alg.is_basic_ideal(i))
                .collect();
            assert_eq!(basics, open_set, "{label}/{ring}");
            assert_eq!(basics.len(), 1 << g.orbits().len(), "{label}/{ring}");
            for (u, iu) in opens.iter().zip(&open_ideals) {
                for (v, iv) in opens.iter().zip(&open_ideals) {
                    assert_eq!(
                        alg.ideal_from_open(&u.intersection(v)).unwrap(),
                        alg.ideal_intersect(iu, iv)
                    );
                    assert_eq!(
                        alg.ideal_from_open(&u.union(v)).unwrap(),
                        alg.ideal_sum(iu, iv)
                    );
                }
            }
        }
    }
    println!(
        "[PASS] 03 basic ideals ↔ invariant open sets: 2^#orbits of them, and U ↦ I_U turns ∩ into ideal intersection and ∪ into ideal sum"
    );
}

#[test]
fn c04_non_effective_kernel_counterexample() {
    let g = catalog::cyclic_group(2);
    let alg = SteinbergAlgebra::new(&g, RingSpec::Zmod(2)).unwrap();
    let kernel = alg.unit_rep_kernel();
    assert!(!kernel.is_zero());
    assert!(alg.is_basic_ideal(&kernel));
    assert!(!alg.meets_unit_subalgebra(&kernel));
    for u in g.invariant_open_sets().unwrap() {
        assert_ne!(kernel, alg.ideal_from_open(&u).unwrap());
    }
    println!(
        "[PASS] 04 order-2 group over F2: the unit-representation kernel is a nonzero basic ideal meeting the unit subalgebra trivially, and is no open-support ideal"
    );
}

#[test]
fn c05_spanning_and_restriction_on_every_enumerated_ideal() {
    let mut checked = 0usize;
    for (label, g) in catalog::enumeration_catalog() {
        assert!(g.is_strongly_effective().unwrap());
        for ring in catalog_rings() {
            let alg = SteinbergAlgebra::new(&g, ring.clone()).unwrap();
            for ideal in alg.enumerate_all_ideals().unwrap() {
                assert!(alg.spanning_property_holds(&ideal), "{label}/{ring}");
                assert!(alg.restriction_property_holds(&ideal), "{label}/{ring}");
                checked += 1;
            }
        }
    }
    println!(
        "[PASS] 05 spanning and unit-space restriction hold for all {checked} enumerated ideals on the strongly effective catalog"
    );
}

#[test]
fn c06_exact_sequences_everywhere() {
    let rings = vec![
        RingSpec::Zmod(2),
        RingSpec::Zmod(4),
        RingSpec::Product(vec![RingSpec::Zmod(4), RingSpec::Zmod(3)]),
    ];
    let mut checked = 0usize;
    for (label, g) in catalog::all_groupoids() {
        for ring in &rings {
            let alg = SteinbergAlgebra::new(&g, ring.clone()).unwrap();
            for u in g.invariant_open_sets().unwrap() {
                let report = alg.check_exact_sequence(&u).unwrap();
                assert!(report.is_exact(), "{label}/{ring} at {}: {:?}", g.render_unit_set(&u), report);
                checked += 1;
            }
        }
    }
    println!(
        "[PASS] 06 restriction/extension sequence exact at all {checked} (groupoid, ring, invariant open) combinations"
    );
}

#[test]
fn c07_every_ideal_is_basic_over_a_field() {
    for (label, g) in catalog::all_groupoids() {
        for ring in [RingSpec::Zmod(2), RingSpec::Zmod(3)] {
            let alg = SteinbergAlgebra::new(&g, ring.clone()).unwrap();
            for ideal in alg.enumerate_all_ideals().unwrap() {
                assert!(alg.is_basic_ideal(&ideal), "{label}/{ring}");
            }
        }
    }
    println!("[PASS] 07 over F2 and F3 every enumerated ideal on the catalog is basic");
}

/// A random graph on up to `max_v` vertices and `max_e` edges, sources
/// allowed.
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

#[test]
fn c08_condition_k_direct_vs_quotients() {
    let mut rng = ChaCha8Rng::seed_from_u64(80);
    for _ in 0..500 {
        let g = random_graph(&mut rng, 8, 16);
        assert_eq!(
            g.check_condition_k(),
            g.check_condition_k_via_quotients().unwrap(),
            "disagreement on a random graph"
        );
    }
    assert!(!catalog::single_loop().check_condition_k());
    for m in 1..=4 {
        assert!(catalog::loop_chain(m).check_condition_k());
    }
    assert!(catalog::loop_augmented_tree().check_condition_k());
    println!(
        "[PASS] 08 cycle-multiplicity test agrees with the all-quotients entry test on 500 random graphs and the fixture family"
    );
}

/// A random source-free graph on at most `max_v` vertices that satisfies the
/// return-path multiplicity condition.
fn random_k_graph(rng: &mut ChaCha8Rng, max_v: usize) -> Graph {
    loop {
        let v = rng.gen_range(1..=max_v);
        let vertices: Vec<String> = (0..v).map(|i| format!("v{i}")).collect();
        let mut edges: Vec<(String, String, String)> = Vec::new();
        // Double loops on a random subset keep plenty of vertices cycle-rich.
        for i in 0..v {
            if rng.gen_bool(0.6) {
                edges.push((format!("p{i}"), format!("v{i}"), format!("v{i}")));
                edges.push((format!("q{i}"), format!("v{i}"), format!("v{i}")));
            }
        }
        // Every vertex needs an incoming edge; add a few extras for variety.
        for i in 0..v {
            edges.push((format!("in{i}"), format!("v{}", rng.gen_range(0..v)), format!("v{i}")));
        }
        for j in 0..rng.gen_range(0..=v) {
            edges.push((
                format!("x{j}"),
                format!("v{}", rng.gen_range(0..v)),
                format!("v{}", rng.gen_range(0..v)),
            ));
        }
        let g = Graph::new(vertices, edges).unwrap();
        if g.sources().is_empty() && g.check_condition_k() {
            return g;
        }
    }
}

fn random_ideal(rng: &mut ChaCha8Rng, ring: &RingSpec) -> RIdeal {
    match ring {
        RingSpec::Z => RIdeal::integer(rng.gen_range(0..=30)),
        RingSpec::Zmod(n) => {
            let ds = divisors(*n);
            RIdeal::modular(*n, ds[rng.gen_range(0..ds.len())])
        }
        RingSpec::Product(_) => unreachable!("samplers cover Z and Z/n only"),
    }
}

/// A random ideal containing `i`, in `Z` or `Z/n`.
fn random_ideal_above(rng: &mut ChaCha8Rng, ring: &RingSpec, i: &RIdeal) -> RIdeal {
    match (ring, i) {
        (RingSpec::Z, RIdeal::Int(g)) => {
            if *g == 0 {
                RIdeal::integer(rng.gen_range(0..=12))
            } else {
                let ds = divisors(*g);
                RIdeal::integer(ds[rng.gen_range(0..ds.len())] as i64)
            }
        }
        (RingSpec::Zmod(n), RIdeal::Mod(g)) => {
            let ds = divisors(*g);
            RIdeal::modular(*n, ds[rng.gen_range(0..ds.len())])
        }
        _ => unreachable!("samplers cover Z and Z/n only"),
    }
}

fn random_tail_assignment(
    rng: &mut ChaCha8Rng,
    ring: &RingSpec,
    carrier: &CarrierLattice,
) -> PiFunction {
    let f: BTreeMap<usize, RIdeal> = carrier
        .tail_members()
        .into_iter()
        .map(|t| (t, random_ideal(rng, ring)))
        .collect();
    PiFunction::from_tail_assignment(ring.clone(), &f, carrier).unwrap()
}

#[test]
fn c09_join_is_the_least_valid_upper_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(90);
    for ring in [RingSpec::Z, RingSpec::Zmod(12)] {
        for _ in 0..120 {
            let g = random_k_graph(&mut rng, 6);
            let carrier = CarrierLattice::from_graph(&g).unwrap();
            let pi1 = random_tail_assignment(&mut rng, &ring, &carrier);
            let pi2 = random_tail_assignment(&mut rng, &ring, &carrier);
            let join = pi1.join(&pi2, &carrier).unwrap();
            assert!(join.is_valid(&carrier));
            assert!(pi1.leq(&join, &carrier).unwrap());
            assert!(pi2.leq(&join, &carrier).unwrap());
            let tails = carrier.tail_members();
            for _ in 0..1000 {
                let f: BTreeMap<usize, RIdeal> = tails
                    .iter()
                    .map(|&t| {
                        let sum = pi1.value(t).sum(pi2.value(t));
                        (t, random_ideal_above(&mut rng, &ring, &sum))
                    })
                    .collect();
                let psi = PiFunction::from_tail_assignment(ring.clone(), &f, &carrier).unwrap();
                assert!(pi1.leq(&psi, &carrier).unwrap());
                assert!(pi2.leq(&psi, &carrier).unwrap());
                assert!(join.leq(&psi, &carrier).unwrap(), "a dominating function undercut the join");
            }
        }
    }

    // On chain lattices the join is plain pointwise sum.
    let mut rng = ChaCha8Rng::seed_from_u64(91);
    for m in 1..=4 {
        let g = catalog::loop_chain(m);
        let carrier = CarrierLattice::from_graph(&g).unwrap();
        assert!(carrier.is_chain());
        for ring in [RingSpec::Z, RingSpec::Zmod(12)] {
            for _ in 0..30 {
                let pi1 = random_tail_assignment(&mut rng, &ring, &carrier);
                let pi2 = random_tail_assignment(&mut rng, &ring, &carrier);
                let join = pi1.join(&pi2, &carrier).unwrap();
                let pointwise: Vec<RIdeal> = (1..carrier.member_count())
                    .map(|i| pi1.value(i).sum(pi2.value(i)))
                    .collect();
                assert_eq!(join.values(), &pointwise[..]);
            }
        }
    }

    // In groupoid mode the join realizes to the sum of the realized ideals.
    let cases = vec![
        (catalog::discrete(2), RingSpec::Zmod(12)),
        (catalog::principal(&[2, 1]), RingSpec::Zmod(4)),
    ];
    for (g, ring) in cases {
        let carrier = CarrierLattice::from_groupoid(&g).unwrap();
        let alg = SteinbergAlgebra::new(&g, ring.clone()).unwrap();
        let functions = PiFunction::enumerate_valid(&ring, &carrier).unwrap();
        for p1 in &functions {
            for p2 in &functions {
                let join = p1.join(p2, &carrier).unwrap();
                assert_eq!(
                    alg.realize_gamma(&carrier, &join).unwrap(),
                    alg.ideal_sum(
                        &alg.realize_gamma(&carrier, p1).unwrap(),
                        &alg.realize_gamma(&carrier, p2).unwrap(),
                    )
                );
            }
        }
    }
    println!(
        "[PASS] 09 join soundness: 240 random triples over Z and Z/12 (least among 1000 dominating samples each), chain lattices give pointwise sums, groupoid joins realize to ideal sums"
    );
}

#[test]
fn c10_lasso_evaluation_reconstructs_the_function() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let mut checked = 0usize;
    for (label, g) in catalog::all_graphs() {
        assert!(g.vertex_count() <= 8);
        let carrier = CarrierLattice::from_graph(&g).unwrap();
        let analysis = g.tail_analysis();
        for ring in [RingSpec::Z, RingSpec::Zmod(12)] {
            for _ in 0..25 {
                let pi = random_tail_assignment(&mut rng, &ring, &carrier);
                for i in 1..carrier.member_count() {
                    let h = VertexSet::from_bits(carrier.member_mask(i));
                    let mut acc = pi.ring().unit_ideal();
                    for w in h.iter() {
                        if analysis.stable[w] {
                            let x = g.tail_witness_lasso(w).unwrap();
                            assert!(g.lasso_in_uh(&x, h), "{label}");
                            acc = acc.intersect(&pi.rho_eval(&g, &carrier, &x).unwrap());
                        }
                    }
                    assert_eq!(&acc, pi.value(i), "{label}: member {}", carrier.member_label(i));
                    checked += 1;
                }
            }
        }
    }
    println!(
        "[PASS] 10 lasso evaluation: intersecting ρ over witness lassos rebuilt every one of {checked} function values on the fixture graphs"
    );
}
