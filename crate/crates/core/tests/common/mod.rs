//! Shared helpers for the integration suites: independent oracles (kept
//! deliberately naive) and seeded random generators.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use dtop::lattice::{adjacent, Adjacency, DigitalImage, LatticePoint, SimplexCensus};
use dtop::morphisms::DigitalMap;

pub fn pt(coords: &[i64]) -> LatticePoint {
    LatticePoint::from(coords)
}

pub fn image(points: &[&[i64]], l: usize, dim: usize) -> DigitalImage {
    DigitalImage::new(
        points.iter().map(|c| pt(c)),
        Adjacency::new(l, dim).unwrap(),
    )
    .unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent census oracle: scan subsets size by size, testing pairwise
/// adjacency directly, and stop at the first empty size (any larger clique
/// would contain one of that size).
pub fn census_oracle(image: &DigitalImage) -> Vec<u64> {
    let points: Vec<&LatticePoint> = image.points().iter().collect();
    let mut counts = Vec::new();
    for size in 1..=points.len() {
        let mut count = 0u64;
        for subset in points.iter().combinations(size) {
            let clique = subset
                .iter()
                .tuple_combinations()
                .all(|(p, q)| image.adjacent_in(p, q));
            if clique {
                count += 1;
            }
        }
        if count == 0 {
            break;
        }
        counts.push(count);
    }
    counts
}

pub fn census_counts(census: &SimplexCensus) -> Vec<u64> {
    census.counts().to_vec()
}

/// Brute-force connectivity of a subset, by repeated neighbor sweeps.
pub fn connected_oracle(image: &DigitalImage, subset: &BTreeSet<LatticePoint>) -> bool {
    if subset.is_empty() {
        return true;
    }
    let mut reached = BTreeSet::new();
    reached.insert(subset.iter().next().unwrap().clone());
    loop {
        let grown: BTreeSet<LatticePoint> = subset
            .iter()
            .filter(|p| reached.contains(*p) || reached.iter().any(|q| image.adjacent_in(p, q)))
            .cloned()
            .collect();
        if grown.len() == reached.len() {
            break;
        }
        reached = grown;
    }
    reached.len() == subset.len()
}

/// The literal continuity definition: every connected subset of the source
/// has a connected image. Exponential in the source size.
pub fn continuity_oracle(f: &DigitalMap) -> bool {
    let points: Vec<&LatticePoint> = f.source().points().iter().collect();
    let n = points.len();
    for mask in 1u32..(1 << n) {
        let subset: BTreeSet<LatticePoint> = (0..n)
            .filter(|i| (mask >> i) & 1 == 1)
            .map(|i| points[i].clone())
            .collect();
        if !connected_oracle(f.source(), &subset) {
            continue;
        }
        let image_set: BTreeSet<LatticePoint> =
            subset.iter().map(|p| f.table()[p].clone()).collect();
        if !connected_oracle(f.target(), &image_set) {
            return false;
        }
    }
    true
}

/// Brute-force isomorphism existence via permutations; usable up to 7 or 8
/// points.
pub fn isomorphism_exists_oracle(a: &DigitalImage, b: &DigitalImage) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let left: Vec<&LatticePoint> = a.points().iter().collect();
    let right: Vec<&LatticePoint> = b.points().iter().collect();
    let n = left.len();
    for perm in (0..n).permutations(n) {
        let preserves = (0..n).tuple_combinations().all(|(i, j)| {
            a.adjacent_in(left[i], left[j]) == b.adjacent_in(right[perm[i]], right[perm[j]])
        });
        if preserves {
            return true;
        }
    }
    n == 0
}

/// A random image in a small box: dimension 1..=3, kappa parameter drawn
/// within the dimension, up to `max_points` distinct points.
pub fn random_image(rng: &mut ChaCha8Rng, max_points: usize) -> DigitalImage {
    let dim = rng.gen_range(1..=3usize);
    let l = rng.gen_range(1..=dim);
    random_image_in(rng, max_points, dim, l)
}

pub fn random_image_in(
    rng: &mut ChaCha8Rng,
    max_points: usize,
    dim: usize,
    l: usize,
) -> DigitalImage {
    let count = rng.gen_range(0..=max_points);
    let mut points = BTreeSet::new();
    for _ in 0..count {
        let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3i64)).collect();
        points.insert(LatticePoint::new(coords));
    }
    DigitalImage::new(points, Adjacency::new(l, dim).unwrap()).unwrap()
}

/// A random total map between two images (not usually continuous).
pub fn random_map(
    rng: &mut ChaCha8Rng,
    source: &DigitalImage,
    target: &DigitalImage,
) -> Option<DigitalMap> {
    if target.is_empty() && !source.is_empty() {
        return None;
    }
    let values: Vec<&LatticePoint> = target.points().iter().collect();
    let table: BTreeMap<LatticePoint, LatticePoint> = source
        .points()
        .iter()
        .map(|p| (p.clone(), (*values.choose(rng).unwrap()).clone()))
        .collect();
    Some(DigitalMap::new(source.clone(), target.clone(), table).unwrap())
}

/// A lattice symmetry: permute coordinates, flip signs, translate. These
/// preserve kappa_l adjacency, so they induce digital isomorphisms.
pub struct LatticeSymmetry {
    pub permutation: Vec<usize>,
    pub flips: Vec<bool>,
    pub translation: Vec<i64>,
}

impl LatticeSymmetry {
    pub fn random(rng: &mut ChaCha8Rng, dim: usize) -> Self {
        let mut permutation: Vec<usize> = (0..dim).collect();
        permutation.shuffle(rng);
        Self {
            permutation,
            flips: (0..dim).map(|_| rng.gen_bool(0.5)).collect(),
            translation: (0..dim).map(|_| rng.gen_range(-5..=5i64)).collect(),
        }
    }

    pub fn apply(&self, p: &LatticePoint) -> LatticePoint {
        let coords: Vec<i64> = (0..p.dim())
            .map(|i| {
                let c = p.coords()[self.permutation[i]];
                let c = if self.flips[i] { -c } else { c };
                c + self.translation[i]
            })
            .collect();
        LatticePoint::new(coords)
    }

    /// The image under the symmetry together with the witnessing map.
    pub fn transport(&self, image: &DigitalImage) -> (DigitalImage, DigitalMap) {
        let copy = DigitalImage::new(
            image.points().iter().map(|p| self.apply(p)),
            image.adjacency(),
        )
        .unwrap();
        let table = image
            .points()
            .iter()
            .map(|p| (p.clone(), self.apply(p)))
            .collect();
        let map = DigitalMap::new(image.clone(), copy.clone(), table).unwrap();
        (copy, map)
    }
}

/// Sanity check the helpers themselves against the library's `adjacent`.
pub fn assert_symmetry_preserves_adjacency(image: &DigitalImage, symmetry: &LatticeSymmetry) {
    let adj = image.adjacency();
    for p in image.points() {
        for q in image.points() {
            let before = adjacent(p, q, adj).unwrap();
            let after = adjacent(&symmetry.apply(p), &symmetry.apply(q), adj).unwrap();
            assert_eq!(before, after);
        }
    }
}
