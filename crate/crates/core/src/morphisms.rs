//! Maps between digital images: continuity, isomorphism (with a search
//! procedure), embeddings, and verification of supplied homotopies.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::{AdjacencyGraph, DigitalImage, LatticePoint};

/// A total map between the point sets of two digital images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DigitalMap {
    source: DigitalImage,
    target: DigitalImage,
    table: BTreeMap<LatticePoint, LatticePoint>,
}

impl DigitalMap {
    /// Builds a map, requiring the table to be total on the source and to
    /// take values inside the target.
    pub fn new(
        source: DigitalImage,
        target: DigitalImage,
        table: BTreeMap<LatticePoint, LatticePoint>,
    ) -> Result<Self> {
        for key in table.keys() {
            if !source.contains(key) {
                return Err(Error::KeyOutsideSource(key.clone()));
            }
        }
        for p in source.points() {
            match table.get(p) {
                None => return Err(Error::MissingMapping(p.clone())),
                Some(value) if !target.contains(value) => {
                    return Err(Error::ValueOutsideTarget(value.clone()))
                }
                Some(_) => {}
            }
        }
        Ok(Self {
            source,
            target,
            table,
        })
    }

    pub fn identity(image: &DigitalImage) -> Self {
        let table = image
            .points()
            .iter()
            .map(|p| (p.clone(), p.clone()))
            .collect();
        Self {
            source: image.clone(),
            target: image.clone(),
            table,
        }
    }

    pub fn constant(
        source: DigitalImage,
        target: DigitalImage,
        value: LatticePoint,
    ) -> Result<Self> {
        if !target.contains(&value) {
            return Err(Error::ValueOutsideTarget(value));
        }
        let table = source
            .points()
            .iter()
            .map(|p| (p.clone(), value.clone()))
            .collect();
        Ok(Self {
            source,
            target,
            table,
        })
    }

    pub fn source(&self) -> &DigitalImage {
        &self.source
    }

    pub fn target(&self) -> &DigitalImage {
        &self.target
    }

    pub fn table(&self) -> &BTreeMap<LatticePoint, LatticePoint> {
        &self.table
    }

    pub fn apply(&self, p: &LatticePoint) -> Result<&LatticePoint> {
        self.table
            .get(p)
            .ok_or_else(|| Error::MissingMapping(p.clone()))
    }

    pub fn image_points(&self) -> std::collections::BTreeSet<LatticePoint> {
        self.table.values().cloned().collect()
    }

    pub fn is_injective(&self) -> bool {
        self.image_points().len() == self.table.len()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.image_points().len() == self.target.len()
    }

    /// `g` after `self`: the composite `source -> g.target`.
    pub fn then(&self, g: &DigitalMap) -> Result<DigitalMap> {
        if self.target != g.source {
            return Err(Error::MismatchedSpaces);
        }
        let table = self
            .table
            .iter()
            .map(|(p, mid)| Ok((p.clone(), g.apply(mid)?.clone())))
            .collect::<Result<BTreeMap<_, _>>>()?;
        DigitalMap::new(self.source.clone(), g.target.clone(), table)
    }

    pub fn inverse(&self) -> Option<DigitalMap> {
        if !self.is_bijective() {
            return None;
        }
        let table = self
            .table
            .iter()
            .map(|(p, q)| (q.clone(), p.clone()))
            .collect();
        Some(DigitalMap {
            source: self.target.clone(),
            target: self.source.clone(),
            table,
        })
    }
}

/// Adjacency preservation: adjacent source points map to equal or adjacent
/// target points. Equivalent to the connected-sets-to-connected-sets
/// definition for maps of digital images; the equivalence is exercised by a
/// brute-force oracle in the test suite rather than assumed silently.
pub fn is_continuous(f: &DigitalMap) -> bool {
    let graph = f.source().graph();
    for (i, j) in graph.edges() {
        let p = &graph.vertices()[i];
        let q = &graph.vertices()[j];
        let fp = f.table()[p].clone();
        let fq = f.table()[q].clone();
        if fp != fq && !f.target().adjacent_in(&fp, &fq) {
            return false;
        }
    }
    true
}

/// Bijective with adjacency preserved in both directions.
pub fn is_isomorphism(f: &DigitalMap) -> bool {
    if !f.is_bijective() {
        return false;
    }
    biconditional_on_pairs(f)
}

/// Isomorphism onto the image: injective, and adjacency agrees with the
/// target adjacency induced on the image points.
pub fn is_embedding(f: &DigitalMap) -> bool {
    if !f.is_injective() {
        return false;
    }
    biconditional_on_pairs(f)
}

fn biconditional_on_pairs(f: &DigitalMap) -> bool {
    let points: Vec<&LatticePoint> = f.source().points().iter().collect();
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            let source_adjacent = f.source().adjacent_in(p, q);
            let target_adjacent = f.target().adjacent_in(&f.table()[*p], &f.table()[*q]);
            if source_adjacent != target_adjacent {
                return false;
            }
        }
    }
    true
}

/// Deterministic graph-isomorphism search: vertices of `a` are matched in
/// canonical order against the least available vertex of `b`, with degree
/// and partial-adjacency pruning. Returns the index mapping `a -> b`.
pub fn graph_isomorphism(a: &AdjacencyGraph, b: &AdjacencyGraph) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_multiset() != b.degree_multiset()
    {
        return None;
    }
    let n = a.vertex_count();
    let mut assignment = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign_vertex(a, b, 0, &mut assignment, &mut used) {
        Some(assignment)
    } else {
        None
    }
}

fn assign_vertex(
    a: &AdjacencyGraph,
    b: &AdjacencyGraph,
    i: usize,
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let n = a.vertex_count();
    if i == n {
        return true;
    }
    for j in 0..n {
        if used[j] || b.degree(j) != a.degree(i) {
            continue;
        }
        if (0..i).all(|k| a.is_edge(k, i) == b.is_edge(assignment[k], j)) {
            assignment[i] = j;
            used[j] = true;
            if assign_vertex(a, b, i + 1, assignment, used) {
                return true;
            }
            assignment[i] = usize::MAX;
            used[j] = false;
        }
    }
    false
}

/// Searches for a digital isomorphism between two images. The witness is
/// deterministic: lexicographically least with respect to canonical point
/// order on both sides.
pub fn find_isomorphism(a: &DigitalImage, b: &DigitalImage) -> Option<DigitalMap> {
    let ga = a.graph();
    let gb = b.graph();
    let mapping = graph_isomorphism(&ga, &gb)?;
    let table = mapping
        .iter()
        .enumerate()
        .map(|(i, &j)| (ga.vertices()[i].clone(), gb.vertices()[j].clone()))
        .collect();
    Some(
        DigitalMap::new(a.clone(), b.clone(), table)
            .expect("witness table is total by construction"),
    )
}

/// A table `source x [0, steps] -> target`, the data of a digital homotopy.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomotopyTable {
    source: DigitalImage,
    target: DigitalImage,
    steps: i64,
    table: BTreeMap<(LatticePoint, i64), LatticePoint>,
}

impl HomotopyTable {
    pub fn new(
        source: DigitalImage,
        target: DigitalImage,
        steps: i64,
        table: BTreeMap<(LatticePoint, i64), LatticePoint>,
    ) -> Result<Self> {
        if steps < 0 {
            return Err(Error::NegativeSteps(steps));
        }
        for ((p, t), value) in &table {
            if !source.contains(p) {
                return Err(Error::KeyOutsideSource(p.clone()));
            }
            if *t < 0 || *t > steps {
                return Err(Error::StepOutOfRange { step: *t, steps });
            }
            if !target.contains(value) {
                return Err(Error::ValueOutsideTarget(value.clone()));
            }
        }
        for p in source.points() {
            for t in 0..=steps {
                if !table.contains_key(&(p.clone(), t)) {
                    return Err(Error::MissingHomotopyEntry {
                        point: p.clone(),
                        step: t,
                    });
                }
            }
        }
        Ok(Self {
            source,
            target,
            steps,
            table,
        })
    }

    pub fn source(&self) -> &DigitalImage {
        &self.source
    }

    pub fn target(&self) -> &DigitalImage {
        &self.target
    }

    pub fn steps(&self) -> i64 {
        self.steps
    }

    pub fn at(&self, p: &LatticePoint, t: i64) -> &LatticePoint {
        &self.table[&(p.clone(), t)]
    }
}

/// The three ways a homotopy table can fail to be a homotopy from `f` to
/// `g`, kept separate so callers can tell endpoint mismatches from
/// continuity failures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomotopyReport {
    /// `(point, step)` where the table disagrees with `f` (step 0) or `g` (step j).
    pub endpoint_mismatches: Vec<(LatticePoint, i64)>,
    /// `(point, step)` where the track `t -> H(p, t)` jumps between `step` and `step + 1`.
    pub track_failures: Vec<(LatticePoint, i64)>,
    /// `(step, p, q)` where the slice `H(., step)` breaks a source adjacency.
    pub slice_failures: Vec<(i64, LatticePoint, LatticePoint)>,
}

impl HomotopyReport {
    pub fn is_valid(&self) -> bool {
        self.endpoint_mismatches.is_empty()
            && self.track_failures.is_empty()
            && self.slice_failures.is_empty()
    }
}

/// Checks that the table is a digital homotopy from `f` to `g`: endpoints
/// agree, every time track is continuous from the 2-adjacent step interval,
/// and every fixed-step slice is continuous from the source.
pub fn verify_homotopy(
    h: &HomotopyTable,
    f: &DigitalMap,
    g: &DigitalMap,
) -> Result<HomotopyReport> {
    if f.source() != h.source()
        || g.source() != h.source()
        || f.target() != h.target()
        || g.target() != h.target()
    {
        return Err(Error::MismatchedSpaces);
    }
    let mut report = HomotopyReport::default();
    let steps = h.steps();
    for p in h.source().points() {
        if h.at(p, 0) != f.apply(p)? {
            report.endpoint_mismatches.push((p.clone(), 0));
        }
        if h.at(p, steps) != g.apply(p)? {
            report.endpoint_mismatches.push((p.clone(), steps));
        }
        for t in 0..steps {
            let here = h.at(p, t);
            let next = h.at(p, t + 1);
            if here != next && !h.target().adjacent_in(here, next) {
                report.track_failures.push((p.clone(), t));
            }
        }
    }
    let graph = h.source().graph();
    for t in 0..=steps {
        for (i, j) in graph.edges() {
            let p = &graph.vertices()[i];
            let q = &graph.vertices()[j];
            let hp = h.at(p, t);
            let hq = h.at(q, t);
            if hp != hq && !h.target().adjacent_in(hp, hq) {
                report.slice_failures.push((t, p.clone(), q.clone()));
            }
        }
    }
    Ok(report)
}
