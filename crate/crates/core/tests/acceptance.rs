//! End-to-end acceptance checks. Each test prints one status line (visible
//! with `--nocapture`; failures always surface their output).
//!
//! Two checks pin values reported in the digital-topology literature that
//! exact recomputation contradicts; they are implemented as stated and are
//! expected to fail. See the README's "Known discrepancies" section:
//!   - criterion 03b: the 2-sphere under the 18- and 26-adjacencies is
//!     claimed to be a digital 2-manifold, but its corner neighborhoods
//!     contain adjacent pairs and match no totally disconnected model;
//!   - criterion 06b: the Euler characteristic of the 2-sphere under the
//!     18-adjacency is claimed to be -2, but the clique census (confirmed
//!     by an independent subset-scan oracle) gives 2.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rand::prelude::*;

use common::*;
use dtop::analysis::{
    connected_ray_orders, count_zero_manifold_orientations, euler_characteristic, support,
    support_algebra_check, verify_partition_of_unity, LatticeFunction, PartitionCandidate,
    RAY_ORDER_DEFAULT_BOUND,
};
use dtop::lattice::{
    adjacent, gen_box, gen_cross, gen_interval, gen_sphere, is_connected, neighborhood,
    np_adjacent, remove_points, simplex_census, Adjacency, DigitalImage, LatticePoint,
};
use dtop::manifold::{check_dimension, classify_point, manifold_report};
use dtop::morphisms::{find_isomorphism, is_continuous, is_isomorphism};

fn pass(name: &str) {
    println!("ACCEPTANCE {name}: PASS");
}

fn pts(coords: &[&[i64]]) -> BTreeSet<LatticePoint> {
    coords.iter().map(|c| pt(c)).collect()
}

#[test]
fn criterion_01_zero_sphere_classification() {
    let s0 = image(&[&[-1], &[1]], 1, 1);
    let report = manifold_report(&s0, 1, true, None).unwrap();
    assert!(report.verdict);
    assert_eq!(report.dimension, Some(0));
    assert!(report.boundary.is_empty());
    assert_eq!(count_zero_manifold_orientations(&s0).unwrap(), 4);
    pass("criterion_01 zero-sphere classification");
}

#[test]
fn criterion_02_interval_classification() {
    for a in -5i64..=5 {
        for span in 2i64..=10 {
            let b = a + span;
            let interval = gen_interval(a, b).unwrap();
            let report = manifold_report(&interval, 1, true, None).unwrap();
            assert!(report.verdict, "[{a}, {b}] rejected");
            assert_eq!(report.dimension, Some(1), "[{a}, {b}] wrong dimension");
            assert_eq!(
                report.boundary,
                pts(&[&[a], &[b]]),
                "[{a}, {b}] wrong boundary"
            );
        }
    }
    pass("criterion_02 interval classification");
}

#[test]
fn criterion_03a_sphere_suite_6_adjacency() {
    let sphere = gen_sphere(2, 1).unwrap();
    let report = manifold_report(&sphere, 1, true, None).unwrap();
    assert!(report.verdict);
    assert_eq!(report.dimension, Some(2));
    let corners: BTreeSet<LatticePoint> = sphere
        .points()
        .iter()
        .filter(|p| p.coords().iter().all(|&c| c.abs() == 1))
        .cloned()
        .collect();
    assert_eq!(corners.len(), 8);
    assert_eq!(report.boundary, corners);
    pass("criterion_03a sphere suite, 6-adjacency with boundary");
}

#[test]
fn criterion_03b_sphere_suite_18_and_26_adjacency() {
    // Pinned literature claim: a digital 2-manifold without boundary under
    // the kappa_1 model. Exact recomputation refutes it; this check is
    // expected to fail.
    let mut computed = Vec::new();
    for l in [2usize, 3] {
        let sphere = gen_sphere(2, l).unwrap();
        let report = manifold_report(&sphere, 1, false, None).unwrap();
        computed.push((l, report.verdict, report.dimension));
    }
    let corner_graph = {
        let sphere = gen_sphere(2, 2).unwrap();
        let nbhd = neighborhood(&sphere, &pt(&[1, 1, 1])).unwrap();
        sphere.induced(&nbhd).unwrap().graph()
    };
    let ok = computed
        .iter()
        .all(|&(_, verdict, dimension)| verdict && dimension == Some(2));
    if !ok {
        println!("ACCEPTANCE criterion_03b sphere suite, 18/26-adjacency: FAIL (expected)");
        panic!(
            "literature claim '2-manifold without boundary' not reproduced: computed \
             (adjacency l, verdict, dimension) = {computed:?}. The corner (1,1,1) \
             neighborhood under the 18-adjacency has {} vertices and {} edges (an \
             octahedron graph), so it is isomorphic to no totally disconnected \
             kappa_1 model neighborhood at any dimension.",
            corner_graph.vertex_count(),
            corner_graph.edge_count(),
        );
    }
    pass("criterion_03b sphere suite, 18/26-adjacency");
}

#[test]
fn criterion_03c_sphere_suite_kappa2_model() {
    let sphere = gen_sphere(2, 1).unwrap();
    for with_boundary in [false, true] {
        assert!(!check_dimension(&sphere, 2, 2, with_boundary)
            .unwrap()
            .all_matched());
        assert!(
            !manifold_report(&sphere, 2, with_boundary, None)
                .unwrap()
                .verdict
        );
    }
    pass("criterion_03c sphere suite, kappa_2 model rejected");
}

#[test]
fn criterion_04_counterexample_suite() {
    // cross: center and arm disagree under both planar adjacencies
    let cross4 = gen_cross(3, 1).unwrap();
    assert_eq!(neighborhood(&cross4, &pt(&[0, 0])).unwrap().len(), 4);
    assert_eq!(neighborhood(&cross4, &pt(&[2, 0])).unwrap().len(), 2);
    assert!(!classify_point(&cross4, &pt(&[0, 0]), 1, 1, false)
        .unwrap()
        .is_matched());
    assert!(classify_point(&cross4, &pt(&[2, 0]), 1, 1, false)
        .unwrap()
        .is_matched());
    let cross8 = gen_cross(3, 2).unwrap();
    assert_eq!(neighborhood(&cross8, &pt(&[1, 0])).unwrap().len(), 4);
    assert_eq!(neighborhood(&cross8, &pt(&[2, 0])).unwrap().len(), 2);
    assert!(!classify_point(&cross8, &pt(&[1, 0]), 1, 1, false)
        .unwrap()
        .is_matched());
    assert!(classify_point(&cross8, &pt(&[2, 0]), 1, 1, false)
        .unwrap()
        .is_matched());

    // ring plus diagonal: both manifolds, the union is not
    let full = gen_box(&[(0, 4), (0, 4)], 1).unwrap();
    let inner: Vec<LatticePoint> = gen_box(&[(1, 3), (1, 3)], 1)
        .unwrap()
        .points()
        .iter()
        .cloned()
        .collect();
    let ring = remove_points(&full, &inner);
    let diagonal =
        DigitalImage::new((0..=4).map(|c| pt(&[c, c])), Adjacency::new(1, 2).unwrap()).unwrap();
    assert_eq!(
        manifold_report(&ring, 1, false, None).unwrap().dimension,
        Some(1)
    );
    assert_eq!(
        manifold_report(&diagonal, 1, false, None)
            .unwrap()
            .dimension,
        Some(0)
    );
    let union = ring.union(&diagonal).unwrap();
    for with_boundary in [false, true] {
        assert!(
            !manifold_report(&union, 1, with_boundary, None)
                .unwrap()
                .verdict
        );
    }

    // the four-cycle: a 1-manifold without boundary, isomorphic to neither
    // the digital 1-sphere nor any interval
    let cycle = gen_box(&[(0, 1), (0, 1)], 1).unwrap();
    let report = manifold_report(&cycle, 1, true, None).unwrap();
    assert!(report.verdict);
    assert_eq!(report.dimension, Some(1));
    assert!(report.boundary.is_empty());
    assert!(find_isomorphism(&cycle, &gen_sphere(1, 1).unwrap()).is_none());
    for len in 1..=6 {
        assert!(find_isomorphism(&cycle, &gen_interval(0, len).unwrap()).is_none());
    }
    pass("criterion_04 counterexample suite");
}

#[test]
fn criterion_05_interior_boundary_anomalies() {
    let square = gen_box(&[(1, 3), (1, 3)], 1).unwrap();
    let report = manifold_report(&square, 1, true, None).unwrap();
    assert_eq!(report.dimension, Some(2));
    assert_eq!(report.interior, pts(&[&[2, 2]]));

    let punctured = remove_points(&gen_box(&[(0, 4), (0, 4)], 1).unwrap(), &[pt(&[2, 2])]);
    assert!(is_connected(&punctured));
    let report = manifold_report(&punctured, 1, true, None).unwrap();
    assert_eq!(report.dimension, Some(2));
    assert_eq!(report.interior, pts(&[&[1, 1], &[3, 1], &[1, 3], &[3, 3]]));
    let interior = punctured.induced(&report.interior).unwrap();
    assert!(!is_connected(&interior));
    pass("criterion_05 interior/boundary anomalies");
}

#[test]
fn criterion_06a_euler_characteristic_of_the_interval() {
    assert_eq!(euler_characteristic(&gen_interval(0, 1).unwrap()), 1);
    pass("criterion_06a Euler characteristic of the unit interval");
}

#[test]
fn criterion_06b_euler_characteristic_of_the_18_sphere() {
    let sphere = gen_sphere(2, 2).unwrap();
    let census = simplex_census(&sphere);
    // oracle first: the census must agree with the independent subset scan
    assert_eq!(census_counts(&census), census_oracle(&sphere));
    let chi = euler_characteristic(&sphere);
    // Pinned literature value; expected to fail (the oracle-confirmed
    // census gives chi = 2).
    if chi != -2 {
        println!("ACCEPTANCE criterion_06b Euler characteristic of the 18-sphere: FAIL (expected)");
        panic!(
            "literature value -2 not reproduced: oracle-confirmed census {:?} gives chi = {chi}",
            census.counts(),
        );
    }
    pass("criterion_06b Euler characteristic of the 18-sphere");
}

#[test]
fn criterion_06c_product_and_disjoint_union_inequalities() {
    let edge = gen_interval(0, 1).unwrap();
    let chi_edge = euler_characteristic(&edge);
    assert_eq!(chi_edge, 1);
    let square = gen_box(&[(0, 1), (0, 1)], 1).unwrap();
    let chi_square = euler_characteristic(&square);
    assert_eq!(
        census_counts(&simplex_census(&square)),
        census_oracle(&square)
    );
    assert_ne!(
        chi_square,
        chi_edge * chi_edge,
        "product law unexpectedly held"
    );

    // the disjoint union of the two horizontal edges is the same square
    let bottom = image(&[&[0, 0], &[1, 0]], 1, 2);
    let top = image(&[&[0, 1], &[1, 1]], 1, 2);
    let union = bottom.union(&top).unwrap();
    let chi_union = euler_characteristic(&union);
    assert_ne!(
        chi_union,
        euler_characteristic(&bottom) + euler_characteristic(&top),
        "disjoint union law unexpectedly held"
    );
    pass("criterion_06c product and disjoint-union inequalities");
}

#[test]
fn criterion_07_np_adjacency_law() {
    // The product law NP(kappa_l, kappa_s) = kappa_{l+s} holds when each
    // factor carries the maximal adjacency of its ambient lattice (l = d1,
    // s = d2); the test pins that regime over 1000 seeded cases.
    let mut rng = rng(0x4E50);
    let mut cases = 0usize;
    while cases < 1000 {
        let d1 = rng.gen_range(1..=3usize);
        let d2 = rng.gen_range(1..=3usize);
        let first = random_image_in(&mut rng, 5, d1, d1);
        let second = random_image_in(&mut rng, 5, d2, d2);
        if first.is_empty() || second.is_empty() {
            continue;
        }
        let adj_first = Adjacency::new(d1, d1).unwrap();
        let adj_second = Adjacency::new(d2, d2).unwrap();
        let product_adj = Adjacency::new(d1 + d2, d1 + d2).unwrap();
        for (p, q) in first.points().iter().cartesian_product(first.points()) {
            for (u, v) in second.points().iter().cartesian_product(second.points()) {
                let via_np = np_adjacent((p, u), (q, v), adj_first, adj_second).unwrap();
                let via_sum = adjacent(&p.concat(u), &q.concat(v), product_adj).unwrap();
                assert_eq!(
                    via_np, via_sum,
                    "NP disagreement at ({p}, {u}) vs ({q}, {v}) in Z^{d1} x Z^{d2}"
                );
            }
        }
        cases += 1;
    }

    // Regime boundary: with a sub-maximal factor adjacency the law fails.
    // (0,0) and (1,1) are not 4-adjacent, but the concatenated points are
    // kappa_2-adjacent in Z^3.
    let four = Adjacency::new(1, 2).unwrap();
    let two = Adjacency::new(1, 1).unwrap();
    let p = pt(&[0, 0]);
    let q = pt(&[1, 1]);
    let anchor = pt(&[0]);
    assert!(!np_adjacent((&p, &anchor), (&q, &anchor), four, two).unwrap());
    assert!(adjacent(
        &p.concat(&anchor),
        &q.concat(&anchor),
        Adjacency::new(2, 3).unwrap()
    )
    .unwrap());
    pass("criterion_07 NP-adjacency law (1000 cases, maximal-adjacency regime)");
}

#[test]
fn criterion_08_continuity_oracle_equivalence() {
    let mut rng = rng(0xC817);
    let mut disagreements = 0usize;
    let mut checked = 0usize;
    while checked < 500 {
        let source = random_image(&mut rng, 8);
        let target = random_image(&mut rng, 6);
        let Some(f) = random_map(&mut rng, &source, &target) else {
            continue;
        };
        if is_continuous(&f) != continuity_oracle(&f) {
            disagreements += 1;
        }
        checked += 1;
    }
    assert_eq!(disagreements, 0);
    pass("criterion_08 continuity oracle equivalence (500 maps)");
}

#[test]
fn criterion_09_isomorphism_invariance() {
    let mut rng = rng(0x1509);
    for case in 0..200 {
        let base = match case % 5 {
            0 => gen_box(&[(1, 3), (1, 3)], 1).unwrap(),
            1 => gen_sphere(1, 1).unwrap(),
            2 => gen_interval(0, rng.gen_range(2..=6)).unwrap(),
            _ => random_image(&mut rng, 9),
        };
        let symmetry = LatticeSymmetry::random(&mut rng, base.dim());
        let (copy, map) = symmetry.transport(&base);
        assert!(
            is_isomorphism(&map),
            "case {case}: symmetry not an isomorphism"
        );

        assert_eq!(
            simplex_census(&base),
            simplex_census(&copy),
            "case {case}: census"
        );
        assert_eq!(
            euler_characteristic(&base),
            euler_characteristic(&copy),
            "case {case}: chi"
        );
        let with_boundary = rng.gen_bool(0.5);
        let left = manifold_report(&base, 1, with_boundary, None).unwrap();
        let right = manifold_report(&copy, 1, with_boundary, None).unwrap();
        assert_eq!(left.verdict, right.verdict, "case {case}: verdict");
        assert_eq!(left.dimension, right.dimension, "case {case}: dimension");
        let mapped_interior: BTreeSet<LatticePoint> =
            left.interior.iter().map(|p| symmetry.apply(p)).collect();
        assert_eq!(
            mapped_interior, right.interior,
            "case {case}: interior transport"
        );
        let mapped_boundary: BTreeSet<LatticePoint> =
            left.boundary.iter().map(|p| symmetry.apply(p)).collect();
        assert_eq!(
            mapped_boundary, right.boundary,
            "case {case}: boundary transport"
        );
    }
    pass("criterion_09 isomorphism invariance (200 image pairs)");
}

#[test]
fn criterion_10_ray_orders() {
    for size in 2i64..=8 {
        let interval = gen_interval(0, size - 1).unwrap();
        let orders = connected_ray_orders(&interval, RAY_ORDER_DEFAULT_BOUND).unwrap();
        assert_eq!(orders.len(), 2, "interval of {size} points");
        assert_eq!(orders[0].reversed(), orders[1]);
    }

    // the four-cycle count, pinned after an independent permutation scan
    let cycle = gen_box(&[(0, 1), (0, 1)], 1).unwrap();
    let orders = connected_ray_orders(&cycle, RAY_ORDER_DEFAULT_BOUND).unwrap();
    let oracle = ray_order_count_oracle(&cycle);
    assert_eq!(orders.len(), oracle);
    assert_eq!(orders.len(), 16);
    pass("criterion_10 ray orders (intervals and the four-cycle)");
}

/// Independent scan: permutations checked with the naive connectivity oracle.
fn ray_order_count_oracle(image: &DigitalImage) -> usize {
    let points: Vec<&LatticePoint> = image.points().iter().collect();
    let n = points.len();
    (0..n)
        .permutations(n)
        .filter(|perm| {
            (0..n).all(|split| {
                let down: BTreeSet<LatticePoint> =
                    perm[..split].iter().map(|&i| points[i].clone()).collect();
                let up: BTreeSet<LatticePoint> = perm[split + 1..]
                    .iter()
                    .map(|&i| points[i].clone())
                    .collect();
                connected_oracle(image, &down) && connected_oracle(image, &up)
            })
        })
        .count()
}

#[test]
fn criterion_11_partition_of_unity() {
    let scale = 3i64;
    let window = gen_box(&[(-2, scale + 2), (-2, 2)], 1).unwrap();
    let falling = LatticeFunction::from_fn(window.clone(), |p| {
        let x = p.coords()[0];
        if x <= 0 {
            scale
        } else if x < scale {
            scale - x
        } else {
            0
        }
    });
    let rising = LatticeFunction::from_fn(window.clone(), |p| {
        let x = p.coords()[0];
        if x <= 0 {
            0
        } else if x < scale {
            x
        } else {
            scale
        }
    });
    let cover_falling: BTreeSet<LatticePoint> = window
        .points()
        .iter()
        .filter(|p| p.coords()[0] < scale)
        .cloned()
        .collect();
    let cover_rising: BTreeSet<LatticePoint> = window
        .points()
        .iter()
        .filter(|p| p.coords()[0] > 0)
        .cloned()
        .collect();
    let overlap: BTreeSet<LatticePoint> =
        cover_falling.intersection(&cover_rising).cloned().collect();

    let candidate = PartitionCandidate::new(
        vec![falling.clone(), rising.clone()],
        scale,
        Some(vec![cover_falling, cover_rising]),
    )
    .unwrap();
    let on_overlap = verify_partition_of_unity(&candidate, &overlap).unwrap();
    assert!(on_overlap.nonnegative());
    assert!(on_overlap.supports_meet_neighborhoods());
    assert!(on_overlap.sums_to_target());
    assert_eq!(on_overlap.subordinate(), Some(true));
    assert!(on_overlap.passes());

    // widening the checked set to the whole window breaks condition 2
    let whole: BTreeSet<LatticePoint> = window.points().clone();
    let on_window = verify_partition_of_unity(&candidate, &whole).unwrap();
    assert!(!on_window.supports_meet_neighborhoods());
    assert!(on_window.nonnegative() && on_window.sums_to_target());
    // independent evaluation of exactly which (function, point) pairs fail
    let supports = [support(&falling), support(&rising)];
    let mut expected = Vec::new();
    for p in window.points() {
        let nbhd = neighborhood(&window, p).unwrap();
        for (i, sp) in supports.iter().enumerate() {
            if nbhd.intersection(sp).next().is_none() {
                expected.push((i, p.clone()));
            }
        }
    }
    assert!(!expected.is_empty());
    assert_eq!(on_window.neighborhood_failures, expected);
    let failing_columns: BTreeSet<(usize, i64)> = on_window
        .neighborhood_failures
        .iter()
        .map(|(i, p)| (*i, p.coords()[0]))
        .collect();
    assert_eq!(
        failing_columns,
        [(0, 4), (0, 5), (1, -2), (1, -1)].into_iter().collect()
    );
    pass("criterion_11 partition of unity (exact)");
}

#[test]
fn criterion_12_support_algebra() {
    let mut rng = rng(0x5A12);
    let mut checked = 0usize;
    while checked < 500 {
        let domain = random_image(&mut rng, 10);
        if domain.is_empty() {
            continue;
        }
        let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
            let values: BTreeMap<LatticePoint, i64> = domain
                .points()
                .iter()
                .map(|p| (p.clone(), rng.gen_range(-4..=4i64)))
                .collect();
            LatticeFunction::new(domain.clone(), values).unwrap()
        };
        let f = draw(&mut rng);
        let g = draw(&mut rng);
        let report = support_algebra_check(&f, &g).unwrap();
        assert!(report.product_law, "product law failed on {f:?}, {g:?}");
        assert!(report.sum_subset_law);

        // absolute values give a nonnegative pair, where equality must hold
        let abs = |h: &LatticeFunction| {
            let values: BTreeMap<LatticePoint, i64> = h
                .values()
                .iter()
                .map(|(p, &v)| (p.clone(), v.abs()))
                .collect();
            LatticeFunction::new(domain.clone(), values).unwrap()
        };
        let report = support_algebra_check(&abs(&f), &abs(&g)).unwrap();
        assert!(report.both_nonnegative);
        assert!(report.sum_equality, "nonnegative sum law failed");
        checked += 1;
    }

    // an explicit cancellation witness
    let single = image(&[&[0]], 1, 1);
    let one = LatticeFunction::constant(single.clone(), 1);
    let minus_one = LatticeFunction::constant(single, -1);
    let report = support_algebra_check(&one, &minus_one).unwrap();
    assert!(!report.sum_equality);
    assert_eq!(report.cancellation_witnesses, pts(&[&[0]]));
    pass("criterion_12 support algebra (500 pairs plus cancellation witness)");
}
