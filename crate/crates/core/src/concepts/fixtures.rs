//! Planet, Sun and fruit tables shared by the concept and metric tests.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::*;
use crate::corpus::LemmaTable;
use crate::Language;

const STRUCTURE: [(u32, Option<u32>, &str, &str); 19] = [
    (0, None, "physical entity", "eintiteas"),
    (1, Some(0), "object", "rud"),
    (2, Some(1), "location", "suíomh"),
    (3, Some(1), "whole|unit", "aonad"),
    (4, Some(2), "outer space", "spás seachtrach"),
    (5, Some(3), "living thing", "rud beo"),
    (6, Some(3), "artefact", "déantán"),
    (7, Some(3), "natural object", "rud nádúrtha"),
    (8, Some(5), "person", "duine"),
    (9, Some(6), "toy", "brégán"),
    (10, Some(7), "celestial body", "corp neamhaí"),
    (11, Some(7), "plant structure", "struchtúr planda"),
    (12, Some(8), "relative", "gaol"),
    (13, Some(9), "ball", "liathróid"),
    (14, Some(10), "star", "réalta"),
    (15, Some(10), "planet", "pláinéad"),
    (16, Some(11), "plant organ", "cuid planda"),
    (17, Some(12), "sister", "deirfiúr"),
    (18, Some(16), "fruit", "toradh"),
];

fn tree(irish: bool) -> HypernymTree {
    HypernymTree::new(
        STRUCTURE
            .iter()
            .map(|(id, p, en, ga)| TreeNode {
                id: NodeId(*id),
                parent: p.map(NodeId),
                labels: (if irish { ga } else { en })
                    .split('|')
                    .map(ToString::to_string)
                    .collect(),
            })
            .collect(),
    )
    .unwrap()
}

/// English labels.
pub(crate) fn english_tree() -> HypernymTree {
    tree(false)
}

/// Irish labels on the same structure.
pub(crate) fn irish_tree() -> HypernymTree {
    tree(true)
}

fn rgb(r: f64, g: f64, b: f64) -> Vec<f64> {
    alloc::vec![r / 255.0, g / 255.0, b / 255.0]
}

fn table(language: Language, rows: &[(&str, &str, Vec<f64>)]) -> AdjectiveValueTable {
    let schema = PropertySchema::standard();
    let entries = rows
        .iter()
        .map(|(a, p, c)| AdjectiveValue {
            adjective: a.to_string(),
            property: p.to_string(),
            point: Point::new(c.clone()).unwrap(),
        })
        .collect();
    AdjectiveValueTable::new(language, entries, &schema).unwrap()
}

fn taste(name: &str) -> Vec<f64> {
    PropertySchema::standard()
        .get("taste")
        .unwrap()
        .domain
        .vertex(name)
        .unwrap()
        .coords()
        .to_vec()
}

/// English adjective values.
pub(crate) fn english_table() -> AdjectiveValueTable {
    let v = |x: f64| alloc::vec![x];
    table(
        Language::English,
        &[
            ("same size as Earth", "dimension", v(0.5)),
            ("smaller than Earth", "dimension", v(0.25)),
            ("very large", "dimension", v(0.7)),
            ("huge", "dimension", v(1.0)),
            ("bright", "intensity", v(0.7)),
            ("very bright", "intensity", v(0.8)),
            ("brightest", "intensity", v(1.0)),
            ("hot", "temperature", v(0.75)),
            ("very hot", "temperature", v(1.0)),
            ("cold", "temperature", v(0.4)),
            ("freezing", "temperature", v(0.0)),
            ("freezing cold", "temperature", v(0.0)),
            ("solid", "density", v(0.9)),
            ("gassy", "density", v(0.1)),
            ("very dense", "density", v(1.0)),
            ("rocky", "texture", v(0.9)),
            ("soft", "texture", v(0.4)),
            ("red", "colour", rgb(255.0, 0.0, 0.0)),
            ("very red", "colour", rgb(255.0, 0.0, 0.0)),
            ("green", "colour", rgb(0.0, 255.0, 0.0)),
            ("orange", "colour", rgb(255.0, 165.0, 0.0)),
            ("brown", "colour", rgb(153.0, 76.0, 0.0)),
            ("bitter", "taste", taste("Bitter")),
            ("sweet", "taste", taste("Sweet")),
        ],
    )
}

/// Irish adjective values.
pub(crate) fn irish_table() -> AdjectiveValueTable {
    let v = |x: f64| alloc::vec![x];
    table(
        Language::Irish,
        &[
            ("méid céanna leis an Domhan", "dimension", v(0.5)),
            ("beagnach an méid céanna leis an Domhan", "dimension", v(0.5)),
            ("níos lú ná an Domhan", "dimension", v(0.25)),
            ("an-mhór", "dimension", v(0.8)),
            ("ollmhór", "dimension", v(0.9)),
            ("geal", "intensity", v(0.6)),
            ("an-gheal", "intensity", v(0.7)),
            ("an-geal", "intensity", v(0.7)),
            ("an rud is gile", "intensity", v(1.0)),
            ("an-te", "temperature", v(0.85)),
            ("fuar", "temperature", v(0.4)),
            ("an-fhuar", "temperature", v(0.1)),
            ("an-fuar", "temperature", v(0.1)),
            ("tathagach", "density", v(0.9)),
            ("déanta as gáis", "density", v(0.1)),
            ("an-dlúth", "density", v(1.0)),
            ("carraigeach", "texture", v(0.9)),
            ("bog", "texture", v(0.4)),
            ("dearg", "colour", rgb(255.0, 0.0, 0.0)),
            ("an-dearg", "colour", rgb(255.0, 0.0, 0.0)),
            ("glas", "colour", rgb(0.0, 255.0, 0.0)),
            ("glás", "colour", rgb(0.0, 255.0, 0.0)),
            ("oráiste", "colour", rgb(255.0, 165.0, 0.0)),
            ("donn", "colour", rgb(153.0, 76.0, 0.0)),
            ("searbh", "taste", taste("Bitter")),
            ("milis", "taste", taste("Sweet")),
        ],
    )
}

/// Irish inflected forms of tree labels.
pub(crate) fn irish_lemmas() -> LemmaTable {
    LemmaTable::new([
        ("plánéad", "pláinéad"),
        ("pláinéid", "pláinéad"),
        ("phláinéid", "pláinéad"),
        ("torthaí", "toradh"),
    ])
}

/// English descriptor table: noun, adjectives, descriptor nouns.
pub(crate) fn english_descriptors() -> Vec<(&'static str, Descriptors)> {
    alloc::vec![
        (
            "Venus",
            Descriptors::new(
                ["solid", "rocky", "same size as Earth", "hot", "high pressure", "bright"],
                ["planet", "Earth's sister", "ball"],
            ),
        ),
        (
            "Jupiter",
            Descriptors::new(
                [
                    "very large",
                    "gassy",
                    "orange",
                    "brown",
                    "red",
                    "far away",
                    "windy",
                    "freezing",
                    "very bright",
                ],
                ["planet", "ball", "outer space"],
            ),
        ),
        (
            "Mars",
            Descriptors::new(
                ["very red", "brown", "orange", "cold", "smaller than Earth", "rocky"],
                ["planet", "outer space"],
            ),
        ),
        (
            "Apple",
            Descriptors::new(["round", "soft", "red", "green", "bitter", "sweet"], ["fruit", "ball"]),
        ),
        (
            "Sun",
            Descriptors::new(
                ["brightest", "huge", "very hot", "round", "very dense"],
                ["star", "ball"]
            ),
        ),
    ]
}

/// Irish descriptor table.
pub(crate) fn irish_descriptors() -> Vec<(&'static str, Descriptors)> {
    alloc::vec![
        (
            "Véineas",
            Descriptors::new(
                [
                    "tathagach",
                    "carraigeach",
                    "beagnach an méid céanna leis an Domhan",
                    "an-te",
                    "brú … ard",
                    "geal",
                ],
                ["plánéad", "deirfiúr an Domhan", "liathróid"],
            ),
        ),
        (
            "Iúpatar",
            Descriptors::new(
                [
                    "an-mhór",
                    "déanta as gáis",
                    "oráiste",
                    "donn",
                    "dearg",
                    "i bhfad i gcéin",
                    "an-ghaothmhar",
                    "an-fhuar",
                    "an-gheal",
                ],
                ["plánéad", "spás seachtrach", "liathróid"],
            ),
        ),
        (
            "Mars",
            Descriptors::new(
                [
                    "an-dearg",
                    "oráiste",
                    "donn",
                    "fuar",
                    "níos lú ná an Domhan",
                    "carraigeach"
                ],
                ["plánéad", "spás seachtrach"],
            ),
        ),
        (
            "Úll",
            Descriptors::new(
                ["liathróideach", "bog", "dearg", "glás", "searbh", "milis"],
                ["torthaí", "liathróid"]
            ),
        ),
        (
            "Grian",
            Descriptors::new(
                ["an rud is gile", "ollmhór", "an-te", "liathróideach", "an-dlúth"],
                ["réalta", "liathróid"],
            ),
        ),
    ]
}

/// The five English concepts in table order.
pub(crate) fn english_concepts() -> Vec<(&'static str, Concept)> {
    let (schema, table, tree) = (PropertySchema::standard(), english_table(), english_tree());
    english_descriptors()
        .into_iter()
        .map(|(n, d)| (n, build_concept(&d, &table, &tree, &schema).unwrap()))
        .collect()
}

/// The five Irish concepts in table order.
pub(crate) fn irish_concepts() -> Vec<(&'static str, Concept)> {
    let (schema, table, tree, lemmas) = (PropertySchema::standard(), irish_table(), irish_tree(), irish_lemmas());
    let builder = ConceptBuilder::new(&schema, &table, &tree).with_lemmas(&lemmas);
    irish_descriptors()
        .into_iter()
        .map(|(n, d)| (n, builder.build(&d).unwrap().concept))
        .collect()
}
