//! The classification engine: per-point model matching, minimum-dimension
//! search, manifold / manifold-with-boundary verdicts, interior/boundary
//! decomposition, and submanifold checks.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::lattice::{neighborhood, AdjacencyGraph, DigitalImage, LatticePoint};
use crate::models::{enumerate_model_classes, minimum_class_size, ModelClass};
use crate::morphisms::{graph_isomorphism, is_embedding, DigitalMap};

/// A model class matched by a point's neighborhood, with the witnessing
/// chart (neighborhood point -> model-space point).
#[derive(Clone, Debug)]
pub struct ChartMatch {
    pub class: ModelClass,
    pub chart: BTreeMap<LatticePoint, LatticePoint>,
}

/// Every model class of a fixed `(n, lambda, with_boundary)` query whose
/// graph is isomorphic to the point's neighborhood graph.
#[derive(Clone, Debug)]
pub struct PointMatch {
    pub point: LatticePoint,
    pub neighborhood_size: usize,
    pub matches: Vec<ChartMatch>,
}

impl PointMatch {
    pub fn is_matched(&self) -> bool {
        !self.matches.is_empty()
    }

    /// Whether some matching class is an interior (zero-count 0) class.
    pub fn matches_interior(&self) -> bool {
        self.matches.iter().any(|m| !m.class.is_boundary())
    }
}

/// All-points check at one fixed model dimension.
#[derive(Clone, Debug)]
pub struct DimensionCheck {
    pub n: usize,
    pub interior: BTreeSet<LatticePoint>,
    pub boundary: BTreeSet<LatticePoint>,
    pub unmatched: BTreeSet<LatticePoint>,
}

impl DimensionCheck {
    pub fn all_matched(&self) -> bool {
        self.unmatched.is_empty()
    }
}

/// A point that matched no model class, with the size of its neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointFailure {
    pub point: LatticePoint,
    pub neighborhood_size: usize,
}

/// Outcome of the minimum-dimension scan.
#[derive(Clone, Debug)]
pub struct ManifoldReport {
    pub model_adjacency: usize,
    pub with_boundary: bool,
    pub n_cap: usize,
    pub verdict: bool,
    /// Least dimension at which every required point matches; absent when
    /// no dimension up to the cap works.
    pub dimension: Option<usize>,
    pub interior: BTreeSet<LatticePoint>,
    pub boundary: BTreeSet<LatticePoint>,
    /// On a false verdict: the unmatched points at the most nearly passing
    /// dimension (fewest failures, ties broken toward smaller n).
    pub failures: Vec<PointFailure>,
    /// Points exempted from the verdict (truncation rims). Empty normally.
    pub exempt: BTreeSet<LatticePoint>,
    /// Exempt points that matched nothing at the verdict dimension.
    pub exempt_unmatched: BTreeSet<LatticePoint>,
}

fn match_against_classes(graph: &AdjacencyGraph, classes: &[ModelClass]) -> Vec<ChartMatch> {
    classes
        .iter()
        .filter_map(|class| {
            // size filter; the search itself would reject these anyway
            if class.size() != graph.vertex_count() {
                return None;
            }
            graph_isomorphism(graph, class.graph()).map(|mapping| ChartMatch {
                class: class.clone(),
                chart: mapping
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| {
                        (
                            graph.vertices()[i].clone(),
                            class.graph().vertices()[j].clone(),
                        )
                    })
                    .collect(),
            })
        })
        .collect()
}

fn neighborhood_graph(image: &DigitalImage, p: &LatticePoint) -> Result<AdjacencyGraph> {
    let nbhd = neighborhood(image, p)?;
    Ok(image.induced(&nbhd)?.graph())
}

fn validate_query(n: usize, model_lambda: usize) -> Result<()> {
    if n > 0 && (model_lambda < 1 || model_lambda > n) {
        return Err(Error::InvalidAdjacency {
            l: model_lambda,
            dim: n,
        });
    }
    Ok(())
}

/// Matches one point's neighborhood against every model class of the query.
pub fn classify_point(
    image: &DigitalImage,
    p: &LatticePoint,
    n: usize,
    model_lambda: usize,
    with_boundary: bool,
) -> Result<PointMatch> {
    validate_query(n, model_lambda)?;
    let graph = neighborhood_graph(image, p)?;
    // every class of the query has at least the corner class's size
    if graph.vertex_count() < minimum_class_size(n, model_lambda) {
        return Ok(PointMatch {
            point: p.clone(),
            neighborhood_size: graph.vertex_count(),
            matches: Vec::new(),
        });
    }
    let classes = enumerate_model_classes(n, model_lambda, with_boundary)?;
    Ok(PointMatch {
        point: p.clone(),
        neighborhood_size: graph.vertex_count(),
        matches: match_against_classes(&graph, &classes),
    })
}

/// Checks every point of the image against the fixed-dimension query.
/// Interior classification wins when a point matches both an interior and a
/// boundary class.
pub fn check_dimension(
    image: &DigitalImage,
    n: usize,
    model_lambda: usize,
    with_boundary: bool,
) -> Result<DimensionCheck> {
    validate_query(n, model_lambda)?;
    let mut check = DimensionCheck {
        n,
        interior: BTreeSet::new(),
        boundary: BTreeSet::new(),
        unmatched: BTreeSet::new(),
    };
    let graphs = image
        .points()
        .iter()
        .map(|p| Ok((p, neighborhood_graph(image, p)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let largest = graphs
        .values()
        .map(AdjacencyGraph::vertex_count)
        .max()
        .unwrap_or(0);
    if largest < minimum_class_size(n, model_lambda) {
        // no neighborhood is big enough for any class of this query
        check.unmatched = image.points().clone();
        return Ok(check);
    }
    let classes = enumerate_model_classes(n, model_lambda, with_boundary)?;
    for (p, graph) in &graphs {
        let matches = match_against_classes(graph, &classes);
        if matches.is_empty() {
            check.unmatched.insert((*p).clone());
        } else if matches.iter().any(|m| !m.class.is_boundary()) {
            check.interior.insert((*p).clone());
        } else {
            check.boundary.insert((*p).clone());
        }
    }
    Ok(check)
}

/// Scans dimensions `0..=cap` for the least one at which every point has a
/// model, and decomposes the image into interior and boundary there.
///
/// The default cap is the largest neighborhood size in the image: every
/// model class of dimension n has at least n vertices, so larger dimensions
/// cannot match any neighborhood the image actually has.
pub fn manifold_report(
    image: &DigitalImage,
    model_lambda: usize,
    with_boundary: bool,
    n_cap: Option<usize>,
) -> Result<ManifoldReport> {
    manifold_report_exempt(image, model_lambda, with_boundary, n_cap, &BTreeSet::new())
}

/// `manifold_report` with a set of points excluded from the verdict.
/// Exempt points still belong to the image (they contribute to their
/// neighbors' neighborhoods) but are not required to match any model;
/// rim points of truncated infinite images go here.
pub fn manifold_report_exempt(
    image: &DigitalImage,
    model_lambda: usize,
    with_boundary: bool,
    n_cap: Option<usize>,
    exempt: &BTreeSet<LatticePoint>,
) -> Result<ManifoldReport> {
    if model_lambda < 1 {
        return Err(Error::InvalidAdjacency {
            l: model_lambda,
            dim: image.dim(),
        });
    }
    for p in exempt {
        if !image.contains(p) {
            return Err(Error::PointNotInImage(p.clone()));
        }
    }
    let graphs: BTreeMap<&LatticePoint, AdjacencyGraph> = image
        .points()
        .iter()
        .map(|p| Ok((p, neighborhood_graph(image, p)?)))
        .collect::<Result<_>>()?;
    let largest_neighborhood = graphs
        .values()
        .map(AdjacencyGraph::vertex_count)
        .max()
        .unwrap_or(0);
    let cap = n_cap.unwrap_or(largest_neighborhood);

    let mut best: Option<(usize, BTreeSet<LatticePoint>)> = None;
    for n in 0..=cap {
        if n > 0 && (model_lambda > n || largest_neighborhood < minimum_class_size(n, model_lambda))
        {
            // the model adjacency does not exist at this dimension, or every
            // class is already larger than the largest neighborhood
            continue;
        }
        let classes = enumerate_model_classes(n, model_lambda, with_boundary)?;
        let mut interior = BTreeSet::new();
        let mut boundary = BTreeSet::new();
        let mut unmatched = BTreeSet::new();
        for (p, graph) in &graphs {
            let matches = match_against_classes(graph, &classes);
            if matches.is_empty() {
                unmatched.insert((*p).clone());
            } else if matches.iter().any(|m| !m.class.is_boundary()) {
                interior.insert((*p).clone());
            } else {
                boundary.insert((*p).clone());
            }
        }
        let required_failures: BTreeSet<LatticePoint> =
            unmatched.difference(exempt).cloned().collect();
        if required_failures.is_empty() {
            return Ok(ManifoldReport {
                model_adjacency: model_lambda,
                with_boundary,
                n_cap: cap,
                verdict: true,
                dimension: Some(n),
                interior,
                boundary,
                failures: Vec::new(),
                exempt: exempt.clone(),
                exempt_unmatched: unmatched.intersection(exempt).cloned().collect(),
            });
        }
        let better = match &best {
            None => true,
            Some((_, failures)) => required_failures.len() < failures.len(),
        };
        if better {
            best = Some((n, required_failures));
        }
    }

    let failures = best
        .map(|(_, points)| {
            points
                .into_iter()
                .map(|point| {
                    let neighborhood_size = graphs[&point].vertex_count();
                    PointFailure {
                        point,
                        neighborhood_size,
                    }
                })
                .collect()
        })
        .unwrap_or_default();
    Ok(ManifoldReport {
        model_adjacency: model_lambda,
        with_boundary,
        n_cap: cap,
        verdict: false,
        dimension: None,
        interior: BTreeSet::new(),
        boundary: BTreeSet::new(),
        failures,
        exempt: exempt.clone(),
        exempt_unmatched: BTreeSet::new(),
    })
}

/// `subset` is an r-dimensional submanifold of `image` when it carries an
/// r-manifold structure (with or without boundary) and `chart` embeds it
/// into `image`.
pub fn is_submanifold(
    subset: &DigitalImage,
    image: &DigitalImage,
    chart: &DigitalMap,
    r: usize,
    model_lambda: usize,
) -> Result<bool> {
    if chart.source() != subset || chart.target() != image {
        return Err(Error::MismatchedSpaces);
    }
    if !is_embedding(chart) {
        return Ok(false);
    }
    for with_boundary in [false, true] {
        let report = manifold_report(subset, model_lambda, with_boundary, None)?;
        if report.dimension == Some(r) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Candidate truncation artifacts: points with a full-lattice neighbor
/// outside the bounding box of the point set, widened by one adjacency step
/// inside the image. Meaningful for truncations of unbounded images; for an
/// honest finite image this flags ordinary boundary points too, so callers
/// opt in.
pub fn truncation_rim(image: &DigitalImage) -> BTreeSet<LatticePoint> {
    if image.is_empty() {
        return BTreeSet::new();
    }
    let dim = image.dim();
    let mut lo = vec![i64::MAX; dim];
    let mut hi = vec![i64::MIN; dim];
    for p in image.points() {
        for (k, &c) in p.coords().iter().enumerate() {
            lo[k] = lo[k].min(c);
            hi[k] = hi[k].max(c);
        }
    }
    // a kappa neighbor leaves the box exactly when some coordinate is extremal
    let on_rim: BTreeSet<LatticePoint> = image
        .points()
        .iter()
        .filter(|p| {
            p.coords()
                .iter()
                .enumerate()
                .any(|(k, &c)| c == lo[k] || c == hi[k])
        })
        .cloned()
        .collect();
    let mut rim = on_rim.clone();
    for p in &on_rim {
        for q in image.points() {
            if image.adjacent_in(p, q) {
                rim.insert(q.clone());
            }
        }
    }
    rim
}
