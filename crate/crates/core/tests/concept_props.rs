//! Randomised checks of the concept metric and the tree join.

use std::collections::BTreeSet;

use discotrans_core::concepts::{Concept, ConvexSet, Domain, HypernymTree, NodeId, Point, PropertySchema, TreeNode};
use discotrans_core::metric::{concept_distance, directed_hausdorff, hausdorff};
use proptest::prelude::*;

/// A 19-node tree: ids with their parents.
const PARENTS: [(u32, Option<u32>); 19] = [
    (0, None),
    (1, Some(0)),
    (2, Some(1)),
    (3, Some(1)),
    (4, Some(2)),
    (5, Some(3)),
    (6, Some(3)),
    (7, Some(3)),
    (8, Some(5)),
    (9, Some(6)),
    (10, Some(7)),
    (11, Some(7)),
    (12, Some(8)),
    (13, Some(9)),
    (14, Some(10)),
    (15, Some(10)),
    (16, Some(11)),
    (17, Some(12)),
    (18, Some(16)),
];

fn tree() -> HypernymTree {
    HypernymTree::new(
        PARENTS
            .iter()
            .map(|&(id, p)| TreeNode {
                id: NodeId(id),
                parent: p.map(NodeId),
                labels: vec![format!("node{id}")],
            })
            .collect(),
    )
    .unwrap()
}

fn node() -> impl Strategy<Value = NodeId> {
    (0u32..19).prop_map(NodeId)
}

/// A random point inside `domain`.
fn sample(domain: &Domain, weights: &[f64]) -> Point {
    match domain {
        Domain::Box { lower, upper } => Point::new(
            lower
                .iter()
                .zip(upper)
                .zip(weights)
                .map(|((lo, hi), w)| lo + (hi - lo) * w)
                .collect(),
        )
        .unwrap(),
        Domain::Polytope { vertices } => {
            let total: f64 = weights.iter().take(vertices.len()).sum::<f64>().max(1e-9);
            let d = domain.dimension();
            let mut c = vec![0.0; d];
            for (v, w) in vertices.iter().zip(weights) {
                for (ci, vi) in c.iter_mut().zip(v.point.coords()) {
                    *ci += vi * w / total;
                }
            }
            Point::new(c).unwrap()
        }
    }
}

/// A region: `None` for the full domain, else 1 to 3 random points.
fn region() -> impl Strategy<Value = Option<Vec<[f64; 4]>>> {
    prop::option::weighted(
        0.7,
        prop::collection::vec([0.0f64..=1.0, 0.0..=1.0, 0.0..=1.0, 0.0..=1.0], 1..=3),
    )
}

fn concept() -> impl Strategy<Value = Concept> {
    (prop::collection::vec(region(), 11), prop::collection::vec(node(), 0..4)).prop_map(|(regions, nodes)| {
        let schema = PropertySchema::standard();
        let t = tree();
        let sets = regions
            .into_iter()
            .zip(schema.properties())
            .map(|(r, p)| match r {
                None => ConvexSet::Full,
                Some(points) => ConvexSet::hull(points.iter().map(|w| sample(&p.domain, w)).collect()).unwrap(),
            })
            .collect();
        Concept::new(&schema, &t, sets, t.up_closure(nodes).unwrap()).unwrap()
    })
}

fn d(a: &Concept, b: &Concept) -> f64 {
    concept_distance(a, b, &PropertySchema::standard()).unwrap().total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn concept_distance_is_a_metric(a in concept(), b in concept(), c in concept()) {
        prop_assert_eq!(d(&a, &a), 0.0);
        prop_assert!((d(&a, &b) - d(&b, &a)).abs() < 1e-9);
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c) + 1e-9);
        if a != b {
            prop_assert!(d(&a, &b) > 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn join_is_a_semilattice(x in node(), y in node(), z in node()) {
        let t = tree();
        let j = |v: &[NodeId]| t.join(v).unwrap();
        prop_assert_eq!(j(&[x, x]), x);
        prop_assert_eq!(j(&[x, y]), j(&[y, x]));
        prop_assert_eq!(j(&[j(&[x, y]), z]), j(&[x, j(&[y, z])]));
        prop_assert_eq!(j(&[x, y, z]), j(&[j(&[x, y]), z]));
        let up: BTreeSet<NodeId> = t.path_to_root(x).unwrap().into_iter().collect();
        prop_assert!(up.contains(&j(&[x, y])));
    }
}

/// Points of `[lo, hi]` on the 0.01 grid, plus both ends.
fn grid(lo: f64, hi: f64) -> Vec<f64> {
    let mut v: Vec<f64> = ((lo * 100.0).ceil() as i64..=(hi * 100.0).floor() as i64)
        .map(|k| k as f64 / 100.0)
        .collect();
    v.push(lo);
    v.push(hi);
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

/// `sup_x inf_y |x - y|₁` over the product grids of two boxes.
fn grid_directed(from: &[(f64, f64)], to: &[(f64, f64)]) -> f64 {
    let cells = |b: &[(f64, f64)]| -> Vec<Vec<f64>> {
        b.iter().fold(vec![vec![]], |acc, &(lo, hi)| {
            acc.iter()
                .flat_map(|p| {
                    grid(lo, hi).into_iter().map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect()
        })
    };
    let (xs, ys) = (cells(from), cells(to));
    xs.iter()
        .map(|x| {
            ys.iter()
                .map(|y| x.iter().zip(y).map(|(a, b)| (a - b).abs()).sum::<f64>())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

fn interval(lo: f64, hi: f64) -> ConvexSet {
    ConvexSet::hull(vec![Point::scalar(lo).unwrap(), Point::scalar(hi).unwrap()]).unwrap()
}

/// Two 1-D properties with intervals of length at most 0.4 and three more
/// fixed to points.
fn boxes() -> impl Strategy<Value = Vec<(f64, f64)>> {
    (
        prop::collection::vec((0.0f64..=0.6, 0.0f64..=0.4), 2),
        prop::collection::vec(0.0f64..=1.0, 3),
    )
        .prop_map(|(intervals, points)| {
            intervals
                .into_iter()
                .map(|(lo, len)| (lo, lo + len))
                .chain(points.into_iter().map(|p| (p, p)))
                .collect()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn componentwise_terms_match_a_grid_of_the_product(x in boxes(), y in boxes()) {
        let unit = Domain::unit_cube(1);
        let sets = |b: &[(f64, f64)]| b.iter().map(|&(lo, hi)| interval(lo, hi)).collect::<Vec<_>>();
        let (sx, sy) = (sets(&x), sets(&y));
        let forward: f64 = sx.iter().zip(&sy).map(|(a, b)| directed_hausdorff(a, b, &unit)).sum();
        let backward: f64 = sx.iter().zip(&sy).map(|(a, b)| directed_hausdorff(b, a, &unit)).sum();
        let summed: f64 = sx.iter().zip(&sy).map(|(a, b)| hausdorff(a, b, &unit)).sum();
        let gx = grid_directed(&x, &y);
        let gy = grid_directed(&y, &x);
        prop_assert!((forward - gx).abs() <= 0.02, "{forward} vs grid {gx}");
        prop_assert!((backward - gy).abs() <= 0.02, "{backward} vs grid {gy}");
        prop_assert!(summed + 0.02 >= gx.max(gy));
    }
}

/// `min_λ |p - Σ λ_j g_j|₁` over weights on the 0.01 simplex grid.
fn grid_hull_distance(p: &[f64], gens: &[Vec<f64>; 3]) -> f64 {
    let mut best = f64::INFINITY;
    for a in 0..=100 {
        for b in 0..=(100 - a) {
            let w = [a as f64 / 100.0, b as f64 / 100.0, (100 - a - b) as f64 / 100.0];
            let gap: f64 = (0..p.len())
                .map(|i| (p[i] - (0..3).map(|j| w[j] * gens[j][i]).sum::<f64>()).abs())
                .sum();
            best = best.min(gap);
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linear_program_matches_a_weight_grid(
        p in prop::array::uniform3(-1.0f64..=2.0),
        g in prop::array::uniform3(prop::array::uniform3(0.0f64..=1.0)),
    ) {
        let gens = g.map(|c| c.to_vec());
        let exact = discotrans_core::lp::l1_distance_to_hull(&p, &gens).unwrap();
        let grid = grid_hull_distance(&p, &gens);
        prop_assert!(exact <= grid + 1e-9, "{exact} > grid {grid}");
        prop_assert!(grid - exact <= 0.02, "{exact} vs grid {grid}");
    }
}
