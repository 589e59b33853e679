//! Conceptual-space concepts for nouns.
//!
//! A concept pairs one convex region per property of a
//! [`PropertySchema`] with a set of nodes of a [`HypernymTree`]. Regions come
//! from an [`AdjectiveValueTable`]: the hull of the values of the adjectives
//! seen with the noun, or the whole domain when none was seen. The node set
//! is the union of the root paths of the descriptor nouns, so it is always
//! closed under taking parents.
//!
//! Trees in two languages are comparable when they declare the same node
//! ids with the same parents; a concept records the structural
//! [`TreeSignature`] of the tree it was built against.

mod concept;
mod schema;
mod table;
mod tree;

use alloc::string::String;

pub use concept::{
    build_concept, extract_descriptors, tree_join, BuiltConcept, Concept, ConceptBuilder, ConvexSet, Descriptors,
    PropertyRegion, TreeSet,
};
pub use schema::{taste_vertices, Domain, NamedVertex, Point, Property, PropertySchema, DOMAIN_TOLERANCE};
pub use table::{AdjectiveValue, AdjectiveValueTable};
pub use tree::{HypernymTree, NodeId, TreeNode, TreeSignature};

/// Errors raised while building schemas, tables, trees and concepts.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConceptError {
    /// A point was empty or had a non-finite coordinate.
    #[error("invalid point with {0} coordinates")]
    BadPoint(usize),
    /// A property name appears twice in a schema.
    #[error("property `{0}` declared twice")]
    DuplicateProperty(String),
    /// A property name is not in the schema.
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    /// A point has the wrong number of coordinates for its property.
    #[error("property `{property}` takes {expected} coordinates, got {found}")]
    WrongDimension {
        /// Property name.
        property: String,
        /// Coordinates the property has.
        expected: usize,
        /// Coordinates supplied.
        found: usize,
    },
    /// A value lies outside its property's domain.
    #[error("value of `{adjective}` lies outside the `{property}` domain")]
    OutsideDomain {
        /// The adjective (or point) concerned.
        adjective: String,
        /// Property name.
        property: String,
    },
    /// A table row has no adjective.
    #[error("empty adjective in value table")]
    EmptyAdjective,
    /// An adjective appears twice in a table.
    #[error("adjective `{0}` listed twice")]
    DuplicateAdjective(String),
    /// A node id is not of the form `eN`.
    #[error("invalid node id `{0}`")]
    BadNodeId(String),
    /// A tree signature is not a hexadecimal number.
    #[error("invalid tree signature `{0}`")]
    BadSignature(String),
    /// The tree declaration is malformed.
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    /// A node id is not in the tree.
    #[error("node {0} is not in the tree")]
    UnknownNode(NodeId),
    /// A join of no nodes was requested.
    #[error("cannot join an empty list of nodes")]
    EmptyJoin,
    /// A hull with no points.
    #[error("a hull needs at least one point")]
    EmptyHull,
    /// Hull points of different dimensions.
    #[error("hull points have different dimensions")]
    MixedDimensions,
    /// A concept's regions do not follow the schema.
    #[error("concept properties `{0}` do not match the schema")]
    SchemaMismatch(String),
    /// A concept's node set is not closed under taking parents.
    #[error("tree set is not closed under taking parents")]
    NotUpClosed,
}

/// Lowercases and normalises the spacing of a phrase for lookups.
pub(crate) fn fold_phrase(phrase: &str) -> String {
    let mut out = String::new();
    for w in phrase.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&crate::corpus::fold(w));
    }
    out
}

#[cfg(test)]
pub(crate) mod fixtures;

#[cfg(test)]
mod tests;
