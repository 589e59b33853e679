use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::fixtures::*;
use super::*;
use crate::corpus::{segment_and_tokenize, Preprocessing};
use crate::Language;

const PRINTED_NODE_SETS: [&[u32]; 5] = [
    &[0, 1, 3, 5, 6, 7, 8, 9, 10, 12, 13, 15, 17],
    &[0, 1, 2, 3, 4, 6, 7, 9, 10, 13, 15],
    &[0, 1, 2, 3, 4, 7, 10, 15],
    &[0, 1, 3, 6, 7, 9, 11, 13, 16, 18],
    &[0, 1, 3, 6, 7, 9, 10, 13, 14],
];

fn ids(v: &[u32]) -> BTreeSet<NodeId> {
    v.iter().map(|&i| NodeId(i)).collect()
}

fn scalar(c: &Concept, property: &str) -> Option<f64> {
    match c.region(property)? {
        ConvexSet::Hull(points) if points.len() == 1 && points[0].dim() == 1 => Some(points[0].coords()[0]),
        _ => None,
    }
}

#[test]
fn english_node_sets_match_the_printed_sets() {
    for ((name, c), printed) in english_concepts().iter().zip(PRINTED_NODE_SETS) {
        assert_eq!(c.tree_set().nodes, ids(printed), "{name}");
    }
}

#[test]
fn irish_node_sets_match_the_printed_sets() {
    for ((name, c), printed) in irish_concepts().iter().zip(PRINTED_NODE_SETS) {
        assert_eq!(c.tree_set().nodes, ids(printed), "{name}");
    }
}

#[test]
fn venus_regions() {
    let concepts = english_concepts();
    let venus = &concepts[0].1;
    assert_eq!(scalar(venus, "temperature"), Some(0.75));
    assert_eq!(scalar(venus, "density"), Some(0.9));
    assert_eq!(scalar(venus, "texture"), Some(0.9));
    assert_eq!(scalar(venus, "dimension"), Some(0.5));
    assert_eq!(scalar(venus, "intensity"), Some(0.7));
    for p in ["age", "value", "speed", "colour", "taste", "mass"] {
        assert!(venus.region(p).unwrap().is_full(), "{p}");
    }
}

#[test]
fn apple_regions() {
    let concepts = english_concepts();
    let apple = &concepts[3].1;
    let ConvexSet::Hull(colour) = apple.region("colour").unwrap() else {
        panic!("colour should be a hull");
    };
    assert_eq!(colour.len(), 2);
    assert_eq!(colour[0].coords(), &[0.0, 1.0, 0.0]);
    assert_eq!(colour[1].coords(), &[1.0, 0.0, 0.0]);
    let ConvexSet::Hull(taste) = apple.region("taste").unwrap() else {
        panic!("taste should be a hull");
    };
    assert_eq!(taste.len(), 2);
    assert_eq!(scalar(apple, "texture"), Some(0.4));
}

#[test]
fn irish_scalar_values() {
    let concepts = irish_concepts();
    let expect: [(usize, &str, f64); 14] = [
        (0, "dimension", 0.5),
        (0, "intensity", 0.6),
        (0, "temperature", 0.85),
        (0, "density", 0.9),
        (0, "texture", 0.9),
        (1, "dimension", 0.8),
        (1, "intensity", 0.7),
        (1, "temperature", 0.1),
        (1, "density", 0.1),
        (2, "dimension", 0.25),
        (2, "temperature", 0.4),
        (4, "dimension", 0.9),
        (4, "intensity", 1.0),
        (4, "temperature", 0.85),
    ];
    for (k, p, v) in expect {
        assert_eq!(scalar(&concepts[k].1, p), Some(v), "{} {p}", concepts[k].0);
    }
}

#[test]
fn three_colour_hull_keeps_all_extreme_points() {
    let concepts = english_concepts();
    let ConvexSet::Hull(colour) = concepts[1].1.region("colour").unwrap() else {
        panic!("colour should be a hull");
    };
    assert_eq!(colour.len(), 3);
}

#[test]
fn unknown_adjectives_are_reported_as_dropped() {
    let (schema, table, tree) = (PropertySchema::standard(), english_table(), english_tree());
    let venus = &english_descriptors()[0].1;
    let built = ConceptBuilder::new(&schema, &table, &tree).build(venus).unwrap();
    assert_eq!(built.dropped_adjectives, ["high pressure"]);
    assert!(built.unresolved_nouns.is_empty());
}

#[test]
fn no_descriptors_gives_the_vacuous_concept() {
    let (schema, table, tree) = (PropertySchema::standard(), english_table(), english_tree());
    let c = build_concept(&Descriptors::default(), &table, &tree, &schema).unwrap();
    assert_eq!(c, Concept::vacuous(&schema, &tree));
    assert_eq!(c.tree_set().nodes, ids(&[0]));
}

#[test]
fn concept_new_validates() {
    let (schema, tree) = (PropertySchema::standard(), english_tree());
    let full = || alloc::vec![ConvexSet::Full; 11];
    assert!(Concept::new(&schema, &tree, full(), ids(&[0, 1])).is_ok());
    assert_eq!(
        Concept::new(&schema, &tree, full(), ids(&[0, 3])),
        Err(ConceptError::NotUpClosed)
    );
    assert!(Concept::new(&schema, &tree, full(), ids(&[0, 40])).is_err());
    let mut sets = full();
    sets[0] = ConvexSet::point(Point::scalar(2.0).unwrap());
    assert!(Concept::new(&schema, &tree, sets, ids(&[0])).is_err());
}

#[test]
fn hull_drops_interior_points() {
    let p = |c: &[f64]| Point::new(c.to_vec()).unwrap();
    let h = ConvexSet::hull(alloc::vec![
        p(&[0.0, 0.0, 0.0]),
        p(&[1.0, 0.0, 0.0]),
        p(&[0.5, 0.0, 0.0]),
        p(&[0.0, 1.0, 0.0]),
        p(&[0.0, 0.0, 0.0]),
    ])
    .unwrap();
    assert_eq!(
        h,
        ConvexSet::Hull(alloc::vec![
            p(&[0.0, 0.0, 0.0]),
            p(&[0.0, 1.0, 0.0]),
            p(&[1.0, 0.0, 0.0])
        ])
    );
    let i = ConvexSet::hull(alloc::vec![p(&[0.3]), p(&[0.9]), p(&[0.5])]).unwrap();
    assert_eq!(i, ConvexSet::Hull(alloc::vec![p(&[0.3]), p(&[0.9])]));
    assert_eq!(ConvexSet::hull(Vec::new()), Err(ConceptError::EmptyHull));
}

const ENGLISH_PLANETS: &str = "Venus is a planet in the solar system. Venus has a solid and rocky surface. \
Venus is called Earth's sister because it is nearly the same size as Earth. Venus is very hot and the \
pressure on its surface is high. Venus is bright in the night sky and looks like a ball. \
Mars is cold, but not very cold. Mars is smaller than Earth.";

#[test]
fn extraction_from_running_text() {
    let doc = segment_and_tokenize(ENGLISH_PLANETS, Language::English, &Preprocessing::default());
    let (table, tree) = (english_table(), english_tree());
    let venus = extract_descriptors(&doc, "Venus", &table, &tree, &["not"]);
    assert_eq!(
        venus.adjectives,
        ["solid", "rocky", "same size as Earth", "very hot", "bright"]
    );
    assert_eq!(venus.nouns, ["planet", "sister", "ball"]);
    let mars = extract_descriptors(&doc, "Mars", &table, &tree, &["not"]);
    assert_eq!(mars.adjectives, ["cold", "smaller than Earth"]);
    let absent = extract_descriptors(&doc, "Pluto", &table, &tree, &["not"]);
    assert!(absent.is_empty());
}

#[test]
fn adding_a_descriptor_never_shrinks_a_region() {
    let (schema, table, tree) = (PropertySchema::standard(), english_table(), english_tree());
    let base = Descriptors::new(["red", "cold"], ["planet"]);
    let more = Descriptors::new(["red", "cold", "green", "hot"], ["planet", "fruit"]);
    let a = build_concept(&base, &table, &tree, &schema).unwrap();
    let b = build_concept(&more, &table, &tree, &schema).unwrap();
    for (ra, (rb, p)) in a.regions().iter().zip(b.regions().iter().zip(schema.properties())) {
        assert!(ra.set.is_subset_of(&rb.set, &p.domain), "{}", p.name);
    }
    assert!(a.tree_set().nodes.is_subset(&b.tree_set().nodes));
    assert_eq!(a, build_concept(&base, &table, &tree, &schema).unwrap());
}

#[test]
fn english_and_irish_trees_are_aligned() {
    assert!(english_tree().same_structure(&irish_tree()));
    assert_eq!(english_tree().signature(), irish_tree().signature());
    assert_eq!(tree_join(&irish_tree(), &[NodeId(15), NodeId(14)]), Ok(NodeId(10)));
}
