//! Distances between concepts and nearest-concept translation.
//!
//! Within one property the distance is the Hausdorff distance between the
//! two regions under the taxicab (L1) metric. Since the distance from a
//! point to a convex set is convex in the point, each directed supremum is
//! attained at a generator of the first region, and the distance from that
//! generator to the second hull is a small linear program. A region left
//! unconstrained stands for the property's whole domain.
//!
//! Two tree-node sets `A`, `B` are `max(|A \ B|, |B \ A|)` apart. The
//! distance between concepts is the sum of the per-property distances and
//! the tree-set distance.

use alloc::string::String;
use alloc::vec::Vec;

use crate::concepts::{Concept, ConvexSet, Domain, PropertySchema, TreeSet, TreeSignature};
use crate::lp;

/// Distances closer than this count as ties when ranking.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// Errors raised when comparing concepts.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    /// A concept does not follow the schema it is measured under.
    #[error("concept does not match the schema: {0}")]
    SchemaMismatch(String),
    /// The tree sets refer to differently shaped trees.
    #[error("tree sets come from different trees ({left} vs {right})")]
    TreeMismatch {
        /// Signature of the first tree.
        left: TreeSignature,
        /// Signature of the second tree.
        right: TreeSignature,
    },
    /// Translation was asked for with nothing to choose from.
    #[error("no candidate concepts")]
    NoCandidates,
}

fn rows(set: &ConvexSet, domain: &Domain) -> Vec<Vec<f64>> {
    set.generators(domain).iter().map(|p| p.coords().to_vec()).collect()
}

/// `sup_{x ∈ from} inf_{y ∈ to} |x - y|₁`.
pub fn directed_hausdorff(from: &ConvexSet, to: &ConvexSet, domain: &Domain) -> f64 {
    if from == to {
        return 0.0;
    }
    let target = rows(to, domain);
    rows(from, domain)
        .iter()
        .map(|p| lp::l1_distance_to_hull(p, &target).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max)
}

/// Hausdorff distance between two regions of one property under L1.
pub fn hausdorff(x: &ConvexSet, y: &ConvexSet, domain: &Domain) -> f64 {
    directed_hausdorff(x, y, domain).max(directed_hausdorff(y, x, domain))
}

/// `max(|A \ B|, |B \ A|)` for node sets of the same tree.
pub fn tree_set_distance(a: &TreeSet, b: &TreeSet) -> Result<usize, MetricError> {
    if a.signature != b.signature {
        return Err(MetricError::TreeMismatch {
            left: a.signature,
            right: b.signature,
        });
    }
    let only_a = a.nodes.difference(&b.nodes).count();
    let only_b = b.nodes.difference(&a.nodes).count();
    Ok(only_a.max(only_b))
}

/// Distance of one property.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyDistance {
    /// Property name.
    pub property: String,
    /// Hausdorff distance of the two regions.
    pub distance: f64,
}

/// The parts of a concept distance.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceReport {
    /// Per-property distances in schema order.
    pub properties: Vec<PropertyDistance>,
    /// Tree-set distance.
    pub tree_distance: usize,
    /// Sum of all parts.
    pub total: f64,
}

/// Distance between two concepts under `schema`.
pub fn concept_distance(a: &Concept, b: &Concept, schema: &PropertySchema) -> Result<DistanceReport, MetricError> {
    for c in [a, b] {
        c.validate(schema)
            .map_err(|e| MetricError::SchemaMismatch(alloc::string::ToString::to_string(&e)))?;
    }
    let tree_distance = tree_set_distance(a.tree_set(), b.tree_set())?;
    let properties: Vec<PropertyDistance> = schema
        .properties()
        .iter()
        .zip(a.regions().iter().zip(b.regions()))
        .map(|(p, (ra, rb))| PropertyDistance {
            property: p.name.clone(),
            distance: hausdorff(&ra.set, &rb.set, &p.domain),
        })
        .collect();
    let total = properties.iter().map(|p| p.distance).sum::<f64>() + tree_distance as f64;
    Ok(DistanceReport {
        properties,
        tree_distance,
        total,
    })
}

/// One candidate in a translation ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedCandidate {
    /// Candidate name.
    pub name: String,
    /// Distance to the query.
    pub distance: f64,
    /// Whether another candidate is equally close (within
    /// [`TIE_TOLERANCE`]); tied candidates are ordered by name.
    pub tied: bool,
}

/// Ranks `candidates` by distance to `query`, nearest first.
pub fn translate_noun<S: AsRef<str>>(
    query: &Concept,
    candidates: &[(S, Concept)],
    schema: &PropertySchema,
) -> Result<Vec<RankedCandidate>, MetricError> {
    if candidates.is_empty() {
        return Err(MetricError::NoCandidates);
    }
    let mut ranked = candidates
        .iter()
        .map(|(name, c)| {
            Ok(RankedCandidate {
                name: name.as_ref().into(),
                distance: concept_distance(query, c, schema)?.total,
                tied: false,
            })
        })
        .collect::<Result<Vec<_>, MetricError>>()?;
    ranked.sort_by(|x, y| x.distance.total_cmp(&y.distance).then_with(|| x.name.cmp(&y.name)));
    let mut start = 0;
    while start < ranked.len() {
        let mut end = start + 1;
        while end < ranked.len() && ranked[end].distance - ranked[start].distance <= TIE_TOLERANCE {
            end += 1;
        }
        if end - start > 1 {
            let group = &mut ranked[start..end];
            group.sort_by(|x, y| x.name.cmp(&y.name));
            for r in group.iter_mut() {
                r.tied = true;
            }
        }
        start = end;
    }
    Ok(ranked)
}
