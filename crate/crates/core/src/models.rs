//! Canonical model neighborhoods: the comparison targets for manifold
//! classification. A model class is the neighborhood graph of a
//! representative point of the non-negative orthant `D+^n` (or of `Z^n`
//! when the representative has no zero coordinate), computed inside the
//! model space under a model adjacency kappa_lambda.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lattice::{adjacent_raw, AdjacencyGraph, LatticePoint};
use crate::morphisms::graph_isomorphism;

/// One model neighborhood, keyed by the number of zero coordinates of its
/// representative. `zero_count == 0` is the interior / full `Z^n` class.
#[derive(Clone, Debug)]
pub struct ModelClass {
    n: usize,
    lambda: usize,
    zero_count: usize,
    representative: LatticePoint,
    graph: AdjacencyGraph,
}

impl ModelClass {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The kappa parameter of the model space.
    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn zero_count(&self) -> usize {
        self.zero_count
    }

    pub fn representative(&self) -> &LatticePoint {
        &self.representative
    }

    pub fn graph(&self) -> &AdjacencyGraph {
        &self.graph
    }

    pub fn size(&self) -> usize {
        self.graph.vertex_count()
    }

    /// A representative with at least one zero coordinate models a boundary point.
    pub fn is_boundary(&self) -> bool {
        self.zero_count >= 1
    }
}

/// The neighborhood graph of the representative `(0, ..., 0, 2, ..., 2)`
/// with `zero_count` zeros, computed inside `D+^n` under kappa_lambda.
///
/// Nonzero coordinates sit at 2 so that moves of at most 1 never leave the
/// orthant there; the finite graph therefore equals the neighborhood the
/// infinite model space would give. For `zero_count == 0` the graph equals
/// the `Z^n` model.
pub fn model_neighborhood(n: usize, lambda: usize, zero_count: usize) -> Result<ModelClass> {
    if zero_count > n {
        return Err(Error::ZeroCountOutOfRange { zero_count, n });
    }
    if n == 0 {
        // Z^0 is a single point with nothing next to it.
        return Ok(ModelClass {
            n,
            lambda,
            zero_count,
            representative: LatticePoint::new(Vec::new()),
            graph: AdjacencyGraph::from_points(Vec::new(), |_, _| false),
        });
    }
    if lambda < 1 || lambda > n {
        return Err(Error::InvalidAdjacency { l: lambda, dim: n });
    }
    let mut rep = vec![2i64; n];
    for c in rep.iter_mut().take(zero_count) {
        *c = 0;
    }
    let mut points = BTreeSet::new();
    for moved in 1..=lambda {
        for coords in (0..n).combinations(moved) {
            for signs in 0..(1u32 << moved) {
                let mut q = rep.clone();
                for (bit, &idx) in coords.iter().enumerate() {
                    q[idx] += if (signs >> bit) & 1 == 1 { 1 } else { -1 };
                }
                if q.iter().all(|&c| c >= 0) {
                    points.insert(LatticePoint::new(q));
                }
            }
        }
    }
    let graph = AdjacencyGraph::from_points(points, |p, q| adjacent_raw(p, q, lambda));
    Ok(ModelClass {
        n,
        lambda,
        zero_count,
        representative: LatticePoint::new(rep),
        graph,
    })
}

/// The size of the smallest class of the query `(n, lambda)` — the all-zero
/// corner, whose neighbors move 1..=lambda coordinates by +1 only. Lets
/// matching code skip dimensions whose classes are all too large to fit a
/// neighborhood, without generating them.
pub fn minimum_class_size(n: usize, lambda: usize) -> usize {
    let mut total: u128 = 0;
    for moved in 1..=lambda.min(n) {
        let mut binom: u128 = 1;
        for j in 0..moved {
            binom = binom * (n - j) as u128 / (j + 1) as u128;
        }
        total = total.saturating_add(binom);
    }
    usize::try_from(total).unwrap_or(usize::MAX)
}

/// All model classes for one query: just the interior class when
/// `with_boundary` is false, otherwise every zero count `0..=n`,
/// deduplicated up to graph isomorphism, in ascending zero count.
pub fn enumerate_model_classes(
    n: usize,
    lambda: usize,
    with_boundary: bool,
) -> Result<Vec<ModelClass>> {
    let max_zero_count = if with_boundary { n } else { 0 };
    let mut classes: Vec<ModelClass> = Vec::new();
    for zero_count in 0..=max_zero_count {
        let class = model_neighborhood(n, lambda, zero_count)?;
        if classes
            .iter()
            .all(|kept| graph_isomorphism(kept.graph(), class.graph()).is_none())
        {
            classes.push(class);
        }
    }
    Ok(classes)
}
