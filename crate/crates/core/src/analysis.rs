//! Invariants and function-theoretic constructions: Euler characteristic,
//! orientations and connected-ray linear orders, digital supports and their
//! algebra, and partition-of-unity verification.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lattice::{
    is_connected_subset, neighborhood, simplex_census, DigitalImage, LatticePoint,
};
use crate::manifold::manifold_report;
use crate::morphisms::{is_isomorphism, DigitalMap};

/// Default cap on the permutation enumeration in [`connected_ray_orders`].
pub const RAY_ORDER_DEFAULT_BOUND: usize = 8;

/// An integer-valued function with an explicit finite domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeFunction {
    domain: DigitalImage,
    values: BTreeMap<LatticePoint, i64>,
}

impl LatticeFunction {
    pub fn new(domain: DigitalImage, values: BTreeMap<LatticePoint, i64>) -> Result<Self> {
        for key in values.keys() {
            if !domain.contains(key) {
                return Err(Error::OutsideDomain(key.clone()));
            }
        }
        for p in domain.points() {
            if !values.contains_key(p) {
                return Err(Error::MissingMapping(p.clone()));
            }
        }
        Ok(Self { domain, values })
    }

    pub fn from_fn(domain: DigitalImage, f: impl Fn(&LatticePoint) -> i64) -> Self {
        let values = domain.points().iter().map(|p| (p.clone(), f(p))).collect();
        Self { domain, values }
    }

    pub fn constant(domain: DigitalImage, value: i64) -> Self {
        Self::from_fn(domain, |_| value)
    }

    pub fn domain(&self) -> &DigitalImage {
        &self.domain
    }

    pub fn values(&self) -> &BTreeMap<LatticePoint, i64> {
        &self.values
    }

    pub fn value(&self, p: &LatticePoint) -> Result<i64> {
        self.values
            .get(p)
            .copied()
            .ok_or_else(|| Error::OutsideDomain(p.clone()))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.values().all(|&v| v >= 0)
    }

    pub fn pointwise_add(&self, other: &LatticeFunction) -> Result<LatticeFunction> {
        self.pointwise(other, "pointwise sum", i64::checked_add)
    }

    pub fn pointwise_mul(&self, other: &LatticeFunction) -> Result<LatticeFunction> {
        self.pointwise(other, "pointwise product", i64::checked_mul)
    }

    fn pointwise(
        &self,
        other: &LatticeFunction,
        what: &'static str,
        op: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<LatticeFunction> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch);
        }
        let values = self
            .values
            .iter()
            .map(|(p, &a)| {
                let b = other.values[p];
                op(a, b)
                    .map(|v| (p.clone(), v))
                    .ok_or(Error::Overflow(what))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(LatticeFunction {
            domain: self.domain.clone(),
            values,
        })
    }

    /// `self` after `alpha`: the pullback along a map into this domain.
    pub fn compose_with(&self, alpha: &DigitalMap) -> Result<LatticeFunction> {
        if alpha.target() != &self.domain {
            return Err(Error::MismatchedSpaces);
        }
        let values = alpha
            .source()
            .points()
            .iter()
            .map(|p| Ok((p.clone(), self.value(alpha.apply(p)?)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(LatticeFunction {
            domain: alpha.source().clone(),
            values,
        })
    }
}

/// Alternating sum of the clique census.
pub fn euler_characteristic(image: &DigitalImage) -> i64 {
    simplex_census(image).euler()
}

/// Orientations of a digital 0-manifold are the functions into `{-1, +1}`,
/// so there are `2^|M|` of them.
pub fn count_zero_manifold_orientations(image: &DigitalImage) -> Result<u128> {
    ensure_zero_manifold(image)?;
    if image.len() > 127 {
        return Err(Error::Overflow("orientation count"));
    }
    Ok(1u128 << image.len())
}

/// Lists the orientations explicitly; guarded by the same bound as
/// [`connected_ray_orders`] scaled to sign vectors.
pub fn enumerate_zero_manifold_orientations(
    image: &DigitalImage,
) -> Result<Vec<BTreeMap<LatticePoint, i8>>> {
    ensure_zero_manifold(image)?;
    let count = image.len();
    if count > 16 {
        return Err(Error::BoundExceeded { count, bound: 16 });
    }
    let points: Vec<&LatticePoint> = image.points().iter().collect();
    let mut all = Vec::with_capacity(1 << count);
    for mask in 0u32..(1 << count) {
        let orientation = points
            .iter()
            .enumerate()
            .map(|(i, p)| ((*p).clone(), if (mask >> i) & 1 == 1 { 1i8 } else { -1i8 }))
            .collect();
        all.push(orientation);
    }
    Ok(all)
}

fn ensure_zero_manifold(image: &DigitalImage) -> Result<()> {
    let report = manifold_report(image, 1, false, Some(0))?;
    if report.dimension == Some(0) {
        Ok(())
    } else {
        Err(Error::NotZeroManifold)
    }
}

/// A total order on the points of an image, recorded as the sequence from
/// least to greatest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearOrder {
    sequence: Vec<LatticePoint>,
}

impl LinearOrder {
    pub fn sequence(&self) -> &[LatticePoint] {
        &self.sequence
    }

    pub fn reversed(&self) -> LinearOrder {
        LinearOrder {
            sequence: self.sequence.iter().rev().cloned().collect(),
        }
    }
}

/// All total orders in which, for every point, the down-ray and the up-ray
/// are each digitally connected or empty. Exhaustive over permutations, so
/// the image size is capped by `bound`. Output is lexicographic in the
/// canonical point order.
pub fn connected_ray_orders(image: &DigitalImage, bound: usize) -> Result<Vec<LinearOrder>> {
    let count = image.len();
    if count > bound {
        return Err(Error::BoundExceeded { count, bound });
    }
    let points: Vec<LatticePoint> = image.points().iter().cloned().collect();
    let mut orders = Vec::new();
    for perm in (0..count).permutations(count) {
        let sequence: Vec<&LatticePoint> = perm.iter().map(|&i| &points[i]).collect();
        if rays_connected(image, &sequence)? {
            orders.push(LinearOrder {
                sequence: sequence.into_iter().cloned().collect(),
            });
        }
    }
    Ok(orders)
}

fn rays_connected(image: &DigitalImage, sequence: &[&LatticePoint]) -> Result<bool> {
    for split in 0..sequence.len() {
        let down: BTreeSet<LatticePoint> = sequence[..split].iter().copied().cloned().collect();
        let up: BTreeSet<LatticePoint> = sequence[split + 1..].iter().copied().cloned().collect();
        if !is_connected_subset(image, &down)? || !is_connected_subset(image, &up)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The set where a function is nonzero.
pub fn support(f: &LatticeFunction) -> BTreeSet<LatticePoint> {
    f.values()
        .iter()
        .filter(|(_, &v)| v != 0)
        .map(|(p, _)| p.clone())
        .collect()
}

/// How the supports of two functions interact with their pointwise product
/// and sum. Over the integers the product law is unconditional while the
/// sum law can lose points to cancellation; the witnesses record exactly
/// where that happens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportAlgebraReport {
    /// sp(f*g) == sp(f) n sp(g)
    pub product_law: bool,
    /// sp(f+g) is contained in sp(f) u sp(g)
    pub sum_subset_law: bool,
    /// sp(f+g) == sp(f) u sp(g)
    pub sum_equality: bool,
    pub both_nonnegative: bool,
    /// Points where f and g are nonzero but cancel in the sum.
    pub cancellation_witnesses: BTreeSet<LatticePoint>,
}

pub fn support_algebra_check(
    f: &LatticeFunction,
    g: &LatticeFunction,
) -> Result<SupportAlgebraReport> {
    if f.domain() != g.domain() {
        return Err(Error::DomainMismatch);
    }
    let product = f.pointwise_mul(g)?;
    let sum = f.pointwise_add(g)?;
    let sp_f = support(f);
    let sp_g = support(g);
    let sp_product = support(&product);
    let sp_sum = support(&sum);
    let intersection: BTreeSet<LatticePoint> = sp_f.intersection(&sp_g).cloned().collect();
    let union: BTreeSet<LatticePoint> = sp_f.union(&sp_g).cloned().collect();
    let cancellation_witnesses = union.difference(&sp_sum).cloned().collect();
    Ok(SupportAlgebraReport {
        product_law: sp_product == intersection,
        sum_subset_law: sp_sum.is_subset(&union),
        sum_equality: sp_sum == union,
        both_nonnegative: f.is_nonnegative() && g.is_nonnegative(),
        cancellation_witnesses,
    })
}

/// Checks `sp(f o alpha) == alpha^{-1}(sp(f))` for an isomorphism `alpha`
/// onto the domain of `f`.
pub fn support_pullback_check(f: &LatticeFunction, alpha: &DigitalMap) -> Result<bool> {
    if alpha.target() != f.domain() {
        return Err(Error::MismatchedSpaces);
    }
    if !is_isomorphism(alpha) {
        return Err(Error::NotIsomorphism);
    }
    let pulled = f.compose_with(alpha)?;
    let sp_f = support(f);
    let preimage: BTreeSet<LatticePoint> = alpha
        .table()
        .iter()
        .filter(|(_, value)| sp_f.contains(*value))
        .map(|(key, _)| key.clone())
        .collect();
    Ok(support(&pulled) == preimage)
}

/// A family of functions on one domain proposed as a partition of unity:
/// nonnegative, supports meeting every neighborhood, constant pointwise sum,
/// optionally subordinate to a cover.
#[derive(Clone, Debug)]
pub struct PartitionCandidate {
    functions: Vec<LatticeFunction>,
    target: i64,
    cover: Option<Vec<BTreeSet<LatticePoint>>>,
}

impl PartitionCandidate {
    pub fn new(
        functions: Vec<LatticeFunction>,
        target: i64,
        cover: Option<Vec<BTreeSet<LatticePoint>>>,
    ) -> Result<Self> {
        let first = functions.first().ok_or(Error::DomainMismatch)?;
        for f in &functions {
            if f.domain() != first.domain() {
                return Err(Error::DomainMismatch);
            }
        }
        if let Some(cover) = &cover {
            if cover.len() != functions.len() {
                return Err(Error::CoverLengthMismatch {
                    functions: functions.len(),
                    sets: cover.len(),
                });
            }
            for set in cover {
                for p in set {
                    if !first.domain().contains(p) {
                        return Err(Error::OutsideDomain(p.clone()));
                    }
                }
            }
        }
        Ok(Self {
            functions,
            target,
            cover,
        })
    }

    pub fn functions(&self) -> &[LatticeFunction] {
        &self.functions
    }

    pub fn target(&self) -> i64 {
        self.target
    }

    pub fn cover(&self) -> Option<&[BTreeSet<LatticePoint>]> {
        self.cover.as_deref()
    }

    pub fn domain(&self) -> &DigitalImage {
        self.functions[0].domain()
    }
}

/// Per-condition outcome of a partition-of-unity check. Failure lists name
/// the function index and the offending point.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionReport {
    /// Condition 1: every function nonnegative everywhere.
    pub nonnegativity_failures: Vec<(usize, LatticePoint)>,
    /// Condition 2: for each checked point, every support meets its neighborhood.
    pub neighborhood_failures: Vec<(usize, LatticePoint)>,
    /// Condition 3: the pointwise sum equals the target on the whole domain.
    pub sum_failures: Vec<(LatticePoint, i64)>,
    /// Condition 4 (only with a cover): each support inside its cover set.
    pub subordination_failures: Vec<(usize, LatticePoint)>,
    pub has_cover: bool,
}

impl PartitionReport {
    pub fn nonnegative(&self) -> bool {
        self.nonnegativity_failures.is_empty()
    }

    pub fn supports_meet_neighborhoods(&self) -> bool {
        self.neighborhood_failures.is_empty()
    }

    pub fn sums_to_target(&self) -> bool {
        self.sum_failures.is_empty()
    }

    pub fn subordinate(&self) -> Option<bool> {
        self.has_cover
            .then_some(self.subordination_failures.is_empty())
    }

    pub fn passes(&self) -> bool {
        self.nonnegative()
            && self.supports_meet_neighborhoods()
            && self.sums_to_target()
            && self.subordinate().unwrap_or(true)
    }
}

/// Verifies the partition-of-unity conditions. Nonnegativity and the sum
/// condition are global; the neighborhood condition is evaluated on
/// `check_domain` because families are often partitions only on an overlap.
pub fn verify_partition_of_unity(
    candidate: &PartitionCandidate,
    check_domain: &BTreeSet<LatticePoint>,
) -> Result<PartitionReport> {
    let domain = candidate.domain();
    for p in check_domain {
        if !domain.contains(p) {
            return Err(Error::OutsideDomain(p.clone()));
        }
    }
    let mut report = PartitionReport {
        has_cover: candidate.cover().is_some(),
        ..PartitionReport::default()
    };
    let supports: Vec<BTreeSet<LatticePoint>> = candidate.functions().iter().map(support).collect();

    for (i, f) in candidate.functions().iter().enumerate() {
        for (p, &v) in f.values() {
            if v < 0 {
                report.nonnegativity_failures.push((i, p.clone()));
            }
        }
    }
    for p in check_domain {
        let nbhd = neighborhood(domain, p)?;
        for (i, sp) in supports.iter().enumerate() {
            if nbhd.intersection(sp).next().is_none() {
                report.neighborhood_failures.push((i, p.clone()));
            }
        }
    }
    for p in domain.points() {
        let mut total: i64 = 0;
        for f in candidate.functions() {
            total = total
                .checked_add(f.value(p)?)
                .ok_or(Error::Overflow("partition sum"))?;
        }
        if total != candidate.target() {
            report.sum_failures.push((p.clone(), total));
        }
    }
    if let Some(cover) = candidate.cover() {
        for (i, (sp, set)) in supports.iter().zip(cover).enumerate() {
            for p in sp.difference(set) {
                report.subordination_failures.push((i, p.clone()));
            }
        }
    }
    Ok(report)
}
