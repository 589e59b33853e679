//! JSON form of a concept.
//!
//! ```json
//! {
//!   "name": "Mars",
//!   "language": "en",
//!   "tree_signature": "00c0ffee00c0ffee",
//!   "nodes": ["e0", "e1", "e15"],
//!   "properties": [
//!     { "property": "dimension", "region": [[0.25]] },
//!     { "property": "age", "region": "full" }
//!   ]
//! }
//! ```
//!
//! Properties appear in schema order and `region` is either `"full"` or the
//! list of hull generators. Output is byte-stable: the same concept always
//! serialises to the same text.

use std::collections::BTreeSet;

use discotrans_core::concepts::{Concept, ConvexSet, HypernymTree, NodeId, Point, PropertySchema, TreeSignature};
use discotrans_core::Language;
use serde::{Deserialize, Serialize};

use super::parse_language;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RegionJson {
    Named(String),
    Hull(Vec<Vec<f64>>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PropertyJson {
    property: String,
    region: RegionJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConceptJson {
    name: String,
    language: String,
    tree_signature: String,
    nodes: Vec<String>,
    properties: Vec<PropertyJson>,
}

/// A concept with the name and language it was built for.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedConcept {
    /// Noun the concept describes.
    pub name: String,
    /// Language of the noun.
    pub language: Language,
    /// The concept.
    pub concept: Concept,
}

/// Serialises a concept as pretty-printed JSON with a trailing newline.
pub fn write_concept(named: &NamedConcept) -> Result<String> {
    let c = &named.concept;
    let doc = ConceptJson {
        name: named.name.clone(),
        language: named.language.code().to_string(),
        tree_signature: c.tree_set().signature.to_string(),
        nodes: c.tree_set().nodes.iter().map(NodeId::to_string).collect(),
        properties: c
            .regions()
            .iter()
            .map(|r| PropertyJson {
                property: r.property.clone(),
                region: match &r.set {
                    ConvexSet::Full => RegionJson::Named("full".into()),
                    ConvexSet::Hull(points) => RegionJson::Hull(points.iter().map(|p| p.coords().to_vec()).collect()),
                },
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    Ok(text)
}

/// Parses a concept, checking it against `schema` and `tree`.
pub fn read_concept(source: &str, name: &str, schema: &PropertySchema, tree: &HypernymTree) -> Result<NamedConcept> {
    let doc: ConceptJson = serde_json::from_str(source).map_err(|e| Error::format(name, e.to_string()))?;
    let bad = |m: String| Error::format(name, m);
    let signature: TreeSignature = doc
        .tree_signature
        .parse()
        .map_err(|e: discotrans_core::concepts::ConceptError| bad(e.to_string()))?;
    if signature != tree.signature() {
        return Err(bad(format!(
            "tree signature {signature} does not match the loaded tree ({})",
            tree.signature()
        )));
    }
    let nodes = doc
        .nodes
        .iter()
        .map(|n| n.parse::<NodeId>().map_err(|e| bad(e.to_string())))
        .collect::<Result<BTreeSet<_>>>()?;
    if doc.properties.len() != schema.properties().len() {
        return Err(bad(format!(
            "expected {} properties, found {}",
            schema.properties().len(),
            doc.properties.len()
        )));
    }
    let mut sets = Vec::with_capacity(doc.properties.len());
    for (p, expected) in doc.properties.into_iter().zip(schema.properties()) {
        if p.property != expected.name {
            return Err(bad(format!(
                "expected property `{}`, found `{}`",
                expected.name, p.property
            )));
        }
        sets.push(match p.region {
            RegionJson::Named(s) if s == "full" => ConvexSet::Full,
            RegionJson::Named(s) => return Err(bad(format!("unknown region `{s}`"))),
            RegionJson::Hull(points) => ConvexSet::Hull(
                points
                    .into_iter()
                    .map(|c| Point::new(c).map_err(|e| bad(e.to_string())))
                    .collect::<Result<_>>()?,
            ),
        });
    }
    Ok(NamedConcept {
        name: doc.name,
        language: parse_language(&doc.language, name)?,
        concept: Concept::new(schema, tree, sets, nodes).map_err(|e| bad(e.to_string()))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::tree::parse_tree;

    fn fixture() -> (PropertySchema, HypernymTree, NamedConcept) {
        let schema = PropertySchema::standard();
        let tree = parse_tree("e0 - entity\ne1 e0 object\ne2 e1 planet\n", "t").unwrap();
        let mut sets = vec![ConvexSet::Full; schema.properties().len()];
        sets[0] = ConvexSet::hull(vec![Point::scalar(0.25).unwrap(), Point::scalar(0.7).unwrap()]).unwrap();
        sets[4] = ConvexSet::point(Point::new(vec![1.0, 0.0, 0.0]).unwrap());
        let nodes = tree.up_closure([NodeId(2)]).unwrap();
        let concept = Concept::new(&schema, &tree, sets, nodes).unwrap();
        let named = NamedConcept {
            name: "Mars".into(),
            language: Language::English,
            concept,
        };
        (schema, tree, named)
    }

    #[test]
    fn round_trips_and_is_stable() {
        let (schema, tree, named) = fixture();
        let text = write_concept(&named).unwrap();
        let back = read_concept(&text, "t", &schema, &tree).unwrap();
        assert_eq!(back, named);
        assert_eq!(write_concept(&back).unwrap(), text);
        assert!(text.contains("\"region\": \"full\""));
    }

    #[test]
    fn rejects_foreign_trees_and_reordered_properties() {
        let (schema, tree, named) = fixture();
        let text = write_concept(&named).unwrap();
        let other = parse_tree("e0 - a\ne1 e0 b\ne2 e0 c\n", "o").unwrap();
        assert!(read_concept(&text, "t", &schema, &other).is_err());
        let swapped = text.replacen("\"dimension\"", "\"age\"", 1);
        assert!(read_concept(&swapped, "t", &schema, &tree).is_err());
        let not_closed = text.replace("\"e1\",", "");
        assert!(read_concept(&not_closed, "t", &schema, &tree).is_err());
    }
}
