//! Points of `Z^d`, kappa-adjacency, finite digital images, neighborhoods,
//! induced graphs, connectivity, clique censuses, normal-product adjacency,
//! and generators for the standard images.
//!
//! Everything here is exact integer combinatorics over immutable values;
//! every operation is a pure function of its inputs.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generators refuse to materialize more points than this.
pub const MAX_GENERATED_POINTS: u128 = 1 << 20;

/// A point of the integer lattice `Z^d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Componentwise checked translation.
    pub fn translate(&self, delta: &[i64]) -> Result<LatticePoint> {
        if delta.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: delta.len(),
            });
        }
        let coords = self
            .coords
            .iter()
            .zip(delta)
            .map(|(c, d)| c.checked_add(*d).ok_or(Error::Overflow("translation")))
            .collect::<Result<Vec<i64>>>()?;
        Ok(LatticePoint::new(coords))
    }

    /// Concatenation `(p, q)` as a point of `Z^{d1+d2}`; realizes product images.
    pub fn concat(&self, other: &LatticePoint) -> LatticePoint {
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&other.coords);
        LatticePoint::new(coords)
    }
}

impl From<&[i64]> for LatticePoint {
    fn from(coords: &[i64]) -> Self {
        LatticePoint::new(coords.to_vec())
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(coords: Vec<i64>) -> Self {
        LatticePoint::new(coords)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// Points read better as `(1,0)` than as a struct in test failures.
impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The kappa_l adjacency relation on `Z^dim`: two distinct points are
/// adjacent when every coordinate differs by at most 1 and at most `l`
/// coordinates differ.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Adjacency {
    l: usize,
    dim: usize,
}

impl Adjacency {
    pub fn new(l: usize, dim: usize) -> Result<Self> {
        if l < 1 || l > dim {
            return Err(Error::InvalidAdjacency { l, dim });
        }
        Ok(Self { l, dim })
    }

    /// Resolves a named adjacency (2 in `Z`; 4, 8 in `Z^2`; 6, 18, 26 in `Z^3`; ...)
    /// against an ambient dimension.
    pub fn named(name: usize, dim: usize) -> Result<Self> {
        for l in 1..=dim {
            if neighbor_count(l, dim) == name {
                return Ok(Self { l, dim });
            }
        }
        Err(Error::UnknownNamedAdjacency { name, dim })
    }

    /// The conventional name: the number of kappa_l neighbors of a point of `Z^dim`.
    pub fn name(&self) -> usize {
        neighbor_count(self.l, self.dim)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

fn neighbor_count(l: usize, dim: usize) -> usize {
    // sum over i of 2^i * C(dim, i) for i = 1..=l
    let mut total = 0usize;
    for i in 1..=l {
        let mut binom = 1usize;
        for j in 0..i {
            binom = binom * (dim - j) / (j + 1);
        }
        total += binom << i;
    }
    total
}

/// Raw adjacency test on coordinate slices; callers guarantee equal dimensions.
pub(crate) fn adjacent_raw(p: &LatticePoint, q: &LatticePoint, l: usize) -> bool {
    debug_assert_eq!(p.dim(), q.dim());
    let mut diffs = 0usize;
    for (a, b) in p.coords().iter().zip(q.coords()) {
        match a.abs_diff(*b) {
            0 => {}
            1 => diffs += 1,
            _ => return false,
        }
    }
    diffs >= 1 && diffs <= l
}

/// Whether `p` and `q` are kappa_l-adjacent.
pub fn adjacent(p: &LatticePoint, q: &LatticePoint, adj: Adjacency) -> Result<bool> {
    for point in [p, q] {
        if point.dim() != adj.dim() {
            return Err(Error::DimensionMismatch {
                expected: adj.dim(),
                found: point.dim(),
            });
        }
    }
    Ok(adjacent_raw(p, q, adj.l()))
}

/// A finite set of lattice points together with an adjacency relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DigitalImage {
    points: BTreeSet<LatticePoint>,
    adjacency: Adjacency,
}

impl DigitalImage {
    /// Builds an image, rejecting duplicates and dimension mismatches.
    pub fn new(
        points: impl IntoIterator<Item = LatticePoint>,
        adjacency: Adjacency,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in points {
            if p.dim() != adjacency.dim() {
                return Err(Error::DimensionMismatch {
                    expected: adjacency.dim(),
                    found: p.dim(),
                });
            }
            if !set.insert(p.clone()) {
                return Err(Error::DuplicatePoint(p));
            }
        }
        Ok(Self {
            points: set,
            adjacency,
        })
    }

    pub fn empty(adjacency: Adjacency) -> Self {
        Self {
            points: BTreeSet::new(),
            adjacency,
        }
    }

    pub fn points(&self) -> &BTreeSet<LatticePoint> {
        &self.points
    }

    pub fn adjacency(&self) -> Adjacency {
        self.adjacency
    }

    pub fn dim(&self) -> usize {
        self.adjacency.dim()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.contains(p)
    }

    /// Adjacency between members, without re-validating dimensions.
    pub fn adjacent_in(&self, p: &LatticePoint, q: &LatticePoint) -> bool {
        adjacent_raw(p, q, self.adjacency.l())
    }

    /// The sub-image induced on `subset`, which must lie inside the image.
    pub fn induced(&self, subset: &BTreeSet<LatticePoint>) -> Result<DigitalImage> {
        for p in subset {
            if !self.contains(p) {
                return Err(Error::PointNotInImage(p.clone()));
            }
        }
        Ok(DigitalImage {
            points: subset.clone(),
            adjacency: self.adjacency,
        })
    }

    /// Same point set under a different adjacency parameter.
    pub fn with_adjacency(&self, adjacency: Adjacency) -> Result<DigitalImage> {
        if adjacency.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: adjacency.dim(),
            });
        }
        Ok(DigitalImage {
            points: self.points.clone(),
            adjacency,
        })
    }

    /// Set union of two images sharing one adjacency.
    pub fn union(&self, other: &DigitalImage) -> Result<DigitalImage> {
        if self.adjacency != other.adjacency {
            return Err(Error::MismatchedSpaces);
        }
        Ok(DigitalImage {
            points: self.points.union(&other.points).cloned().collect(),
            adjacency: self.adjacency,
        })
    }

    pub fn graph(&self) -> AdjacencyGraph {
        AdjacencyGraph::from_image(self)
    }
}

/// The graph induced by an adjacency relation on an explicit vertex set.
/// Vertices are kept in canonical (lexicographic) order, which makes every
/// downstream search deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct AdjacencyGraph {
    vertices: Vec<LatticePoint>,
    matrix: Vec<bool>,
}

impl AdjacencyGraph {
    pub fn from_image(image: &DigitalImage) -> Self {
        let l = image.adjacency().l();
        Self::from_points(image.points().iter().cloned(), |p, q| adjacent_raw(p, q, l))
    }

    /// Induced graph on arbitrary points under a caller-supplied relation.
    pub fn from_points(
        points: impl IntoIterator<Item = LatticePoint>,
        relation: impl Fn(&LatticePoint, &LatticePoint) -> bool,
    ) -> Self {
        let vertices: Vec<LatticePoint> = {
            let set: BTreeSet<LatticePoint> = points.into_iter().collect();
            set.into_iter().collect()
        };
        let n = vertices.len();
        let mut matrix = vec![false; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                if relation(&vertices[i], &vertices[j]) {
                    matrix[i * n + j] = true;
                    matrix[j * n + i] = true;
                }
            }
        }
        Self { vertices, matrix }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.matrix[i * self.vertices.len() + j]
    }

    pub fn degree(&self, i: usize) -> usize {
        let n = self.vertices.len();
        (0..n).filter(|&j| self.is_edge(i, j)).count()
    }

    /// Sorted degree multiset, the cheap isomorphism filter.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.vertex_count()).map(|i| self.degree(i)).collect();
        degrees.sort_unstable();
        degrees
    }

    /// Edges as index pairs `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.is_edge(i, j) {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }
}

impl fmt::Debug for AdjacencyGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AdjacencyGraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Counts of kappa-simplices per dimension: `counts[r]` is the number of
/// (r+1)-element pairwise-adjacent subsets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplexCensus {
    counts: Vec<u64>,
}

impl SimplexCensus {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn alpha(&self, r: usize) -> u64 {
        self.counts.get(r).copied().unwrap_or(0)
    }

    /// Largest dimension carrying at least one simplex.
    pub fn max_dimension(&self) -> Option<usize> {
        self.counts.iter().rposition(|&c| c > 0)
    }

    /// Alternating sum over the census.
    pub fn euler(&self) -> i64 {
        let mut total: i128 = 0;
        for (r, &count) in self.counts.iter().enumerate() {
            let term = count as i128;
            if r % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        i64::try_from(total).expect("Euler characteristic exceeds i64")
    }
}

/// The kappa-neighbors of `p` inside the image.
pub fn neighborhood(image: &DigitalImage, p: &LatticePoint) -> Result<BTreeSet<LatticePoint>> {
    if !image.contains(p) {
        return Err(Error::PointNotInImage(p.clone()));
    }
    Ok(image
        .points()
        .iter()
        .filter(|q| image.adjacent_in(p, q))
        .cloned()
        .collect())
}

/// `neighborhood` plus the point itself.
pub fn neighborhood_star(image: &DigitalImage, p: &LatticePoint) -> Result<BTreeSet<LatticePoint>> {
    let mut star = neighborhood(image, p)?;
    star.insert(p.clone());
    Ok(star)
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let mut a = self.find(x);
        let mut b = self.find(y);
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// The digitally connected components, as a partition of the point set.
/// Blocks are ordered by their least point.
pub fn components(image: &DigitalImage) -> Vec<BTreeSet<LatticePoint>> {
    let graph = image.graph();
    let mut uf = UnionFind::new(graph.vertex_count());
    for (i, j) in graph.edges() {
        uf.union(i, j);
    }
    let mut blocks: Vec<(usize, BTreeSet<LatticePoint>)> = Vec::new();
    let mut root_slot = vec![usize::MAX; graph.vertex_count()];
    for i in 0..graph.vertex_count() {
        let root = uf.find(i);
        if root_slot[root] == usize::MAX {
            root_slot[root] = blocks.len();
            blocks.push((i, BTreeSet::new()));
        }
        blocks[root_slot[root]]
            .1
            .insert(graph.vertices()[i].clone());
    }
    blocks.sort_by_key(|(first, _)| *first);
    blocks.into_iter().map(|(_, block)| block).collect()
}

/// At most one component (the empty image counts as connected).
pub fn is_connected(image: &DigitalImage) -> bool {
    components(image).len() <= 1
}

/// Only one-point sets are connected.
pub fn is_totally_disconnected(image: &DigitalImage) -> bool {
    components(image).iter().all(|block| block.len() == 1)
}

/// Connectivity of a subset under the ambient image's adjacency.
/// The empty subset counts as connected.
pub fn is_connected_subset(image: &DigitalImage, subset: &BTreeSet<LatticePoint>) -> Result<bool> {
    let sub = image.induced(subset)?;
    Ok(is_connected(&sub))
}

/// Counts every clique of every size. Exhaustive expansion in canonical
/// vertex order, pruned to common neighbors, so each clique is seen once.
pub fn simplex_census(image: &DigitalImage) -> SimplexCensus {
    let graph = image.graph();
    let all: Vec<usize> = (0..graph.vertex_count()).collect();
    let mut counts = Vec::new();
    extend_cliques(&graph, 0, &all, &mut counts);
    SimplexCensus { counts }
}

fn extend_cliques(
    graph: &AdjacencyGraph,
    depth: usize,
    candidates: &[usize],
    counts: &mut Vec<u64>,
) {
    for (pos, &v) in candidates.iter().enumerate() {
        if counts.len() <= depth {
            counts.resize(depth + 1, 0);
        }
        counts[depth] += 1;
        let next: Vec<usize> = candidates[pos + 1..]
            .iter()
            .copied()
            .filter(|&u| graph.is_edge(v, u))
            .collect();
        if !next.is_empty() {
            extend_cliques(graph, depth + 1, &next, counts);
        }
    }
}

/// Normal-product adjacency on pairs: adjacent when one factor moves and the
/// other stays fixed, or both factors move.
pub fn np_adjacent(
    a: (&LatticePoint, &LatticePoint),
    b: (&LatticePoint, &LatticePoint),
    adj_first: Adjacency,
    adj_second: Adjacency,
) -> Result<bool> {
    for p in [a.0, b.0] {
        if p.dim() != adj_first.dim() {
            return Err(Error::DimensionMismatch {
                expected: adj_first.dim(),
                found: p.dim(),
            });
        }
    }
    for p in [a.1, b.1] {
        if p.dim() != adj_second.dim() {
            return Err(Error::DimensionMismatch {
                expected: adj_second.dim(),
                found: p.dim(),
            });
        }
    }
    let first_equal = a.0 == b.0;
    let second_equal = a.1 == b.1;
    let first_adjacent = adjacent_raw(a.0, b.0, adj_first.l());
    let second_adjacent = adjacent_raw(a.1, b.1, adj_second.l());
    Ok((first_equal && second_adjacent)
        || (first_adjacent && second_equal)
        || (first_adjacent && second_adjacent))
}

/// The digital interval `[a, b]` in `Z` with the 2-adjacency.
pub fn gen_interval(a: i64, b: i64) -> Result<DigitalImage> {
    if a > b {
        return Err(Error::InvalidBounds { lo: a, hi: b });
    }
    guard_point_count(span(a, b)?)?;
    let adjacency = Adjacency::new(1, 1)?;
    DigitalImage::new((a..=b).map(|c| LatticePoint::new(vec![c])), adjacency)
}

/// `[-1, 1]^{n+1}` minus the origin: the digital n-sphere, with 3^{n+1} - 1
/// points, under the caller's kappa_l in `Z^{n+1}`.
pub fn gen_sphere(n: usize, l: usize) -> Result<DigitalImage> {
    let dim = n + 1;
    let adjacency = Adjacency::new(l, dim)?;
    let ranges = vec![(-1i64, 1i64); dim];
    let origin = LatticePoint::new(vec![0; dim]);
    let points = box_points(&ranges)?.into_iter().filter(|p| *p != origin);
    DigitalImage::new(points, adjacency)
}

/// An axis-aligned box, one `(lo, hi)` range per coordinate.
pub fn gen_box(ranges: &[(i64, i64)], l: usize) -> Result<DigitalImage> {
    let adjacency = Adjacency::new(l, ranges.len())?;
    DigitalImage::new(box_points(ranges)?, adjacency)
}

/// The coordinate-axis cross in `Z^2` truncated to `[-k, k]`.
pub fn gen_cross(k: i64, l: usize) -> Result<DigitalImage> {
    if k < 1 {
        return Err(Error::InvalidBounds { lo: 1, hi: k });
    }
    guard_point_count(4 * (k as u128) + 1)?;
    let adjacency = Adjacency::new(l, 2)?;
    let mut points = BTreeSet::new();
    for c in -k..=k {
        points.insert(LatticePoint::new(vec![c, 0]));
        points.insert(LatticePoint::new(vec![0, c]));
    }
    DigitalImage::new(points, adjacency)
}

/// The image with the listed points removed; absent points are ignored.
pub fn remove_points(image: &DigitalImage, remove: &[LatticePoint]) -> DigitalImage {
    let removal: BTreeSet<&LatticePoint> = remove.iter().collect();
    let points: BTreeSet<LatticePoint> = image
        .points()
        .iter()
        .filter(|p| !removal.contains(p))
        .cloned()
        .collect();
    DigitalImage {
        points,
        adjacency: image.adjacency(),
    }
}

fn span(lo: i64, hi: i64) -> Result<u128> {
    if lo > hi {
        return Err(Error::InvalidBounds { lo, hi });
    }
    Ok((hi as i128 - lo as i128 + 1) as u128)
}

fn guard_point_count(count: u128) -> Result<()> {
    if count > MAX_GENERATED_POINTS {
        return Err(Error::TooManyPoints {
            requested: count,
            limit: MAX_GENERATED_POINTS,
        });
    }
    Ok(())
}

fn box_points(ranges: &[(i64, i64)]) -> Result<Vec<LatticePoint>> {
    let mut total: u128 = 1;
    for &(lo, hi) in ranges {
        total = total
            .checked_mul(span(lo, hi)?)
            .ok_or(Error::Overflow("box point count"))?;
        guard_point_count(total)?;
    }
    let mut points = vec![Vec::new()];
    for &(lo, hi) in ranges {
        let mut grown = Vec::with_capacity(points.len() * span(lo, hi)? as usize);
        for prefix in &points {
            for c in lo..=hi {
                let mut coords = prefix.clone();
                coords.push(c);
                grown.push(coords);
            }
        }
        points = grown;
    }
    Ok(points.into_iter().map(LatticePoint::new).collect())
}
