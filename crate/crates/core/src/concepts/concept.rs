//! Concepts: one convex region per property plus an up-closed set of tree
//! nodes, built from the descriptors that co-occur with a noun.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::schema::{Domain, Point, PropertySchema};
use super::table::AdjectiveValueTable;
use super::tree::{HypernymTree, NodeId, TreeSignature};
use super::{fold_phrase, ConceptError};
use crate::corpus::{fold, CorpusDoc, LemmaTable};
use crate::lp;

/// Points closer than this to the hull of the others are not extreme.
const EXTREME_TOLERANCE: f64 = 1e-12;

/// A convex region of one property: the whole domain or a point hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvexSet {
    /// The property's entire domain (nothing was said about it).
    Full,
    /// Convex hull of the listed extreme points, sorted and distinct.
    Hull(Vec<Point>),
}

fn as_rows(points: &[Point]) -> Vec<Vec<f64>> {
    points.iter().map(|p| p.coords().to_vec()).collect()
}

impl ConvexSet {
    /// The hull of `points`, kept in canonical form: only extreme points,
    /// sorted lexicographically. Equal hulls therefore compare equal.
    pub fn hull(mut points: Vec<Point>) -> Result<Self, ConceptError> {
        let dim = points.first().ok_or(ConceptError::EmptyHull)?.dim();
        if points.iter().any(|p| p.dim() != dim) {
            return Err(ConceptError::MixedDimensions);
        }
        points.sort();
        points.dedup();
        if dim == 1 {
            let lo = points[0].clone();
            let hi = points[points.len() - 1].clone();
            points = if lo == hi { alloc::vec![lo] } else { alloc::vec![lo, hi] };
        } else {
            let mut i = 0;
            while i < points.len() && points.len() > 1 {
                let others: Vec<Point> = points
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, p)| p.clone())
                    .collect();
                let inside = lp::l1_distance_to_hull(points[i].coords(), &as_rows(&others))
                    .is_some_and(|d| d <= EXTREME_TOLERANCE);
                if inside {
                    points.remove(i);
                } else {
                    i += 1;
                }
            }
        }
        Ok(ConvexSet::Hull(points))
    }

    /// A single point.
    pub fn point(p: Point) -> Self {
        ConvexSet::Hull(alloc::vec![p])
    }

    /// Generators of the set within `domain` (the domain's vertices for
    /// [`ConvexSet::Full`]).
    pub fn generators(&self, domain: &Domain) -> Vec<Point> {
        match self {
            ConvexSet::Full => domain.vertices(),
            ConvexSet::Hull(points) => points.clone(),
        }
    }

    /// Whether this is the whole domain.
    pub fn is_full(&self) -> bool {
        matches!(self, ConvexSet::Full)
    }

    /// L1 distance from `p` to the set.
    pub fn distance_to(&self, p: &Point, domain: &Domain) -> f64 {
        lp::l1_distance_to_hull(p.coords(), &as_rows(&self.generators(domain))).unwrap_or(f64::INFINITY)
    }

    /// Whether `self ⊆ other` (up to a small tolerance).
    pub fn is_subset_of(&self, other: &ConvexSet, domain: &Domain) -> bool {
        other.is_full()
            || self
                .generators(domain)
                .iter()
                .all(|p| other.distance_to(p, domain) <= 1e-9)
    }
}

/// The tree part of a concept: node ids together with the structure they
/// refer to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSet {
    /// Fingerprint of the tree the ids belong to.
    pub signature: TreeSignature,
    /// The ids, closed under taking parents.
    pub nodes: BTreeSet<NodeId>,
}

impl TreeSet {
    /// Up-closure of `ids` in `tree`.
    pub fn closure<I>(tree: &HypernymTree, ids: I) -> Result<Self, ConceptError>
    where
        I: IntoIterator<Item = NodeId>,
    {
        Ok(TreeSet {
            signature: tree.signature(),
            nodes: tree.up_closure(ids)?,
        })
    }
}

/// A property name with its region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyRegion {
    /// Property name.
    pub property: String,
    /// Region in that property's domain.
    pub set: ConvexSet,
}

/// A noun's concept: a product of property regions and a tree-node set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Concept {
    regions: Vec<PropertyRegion>,
    tree_set: TreeSet,
}

impl Concept {
    /// Assembles a concept from one set per schema property, checking it
    /// against `schema` and `tree`. Hulls are brought to canonical form.
    pub fn new(
        schema: &PropertySchema,
        tree: &HypernymTree,
        sets: Vec<ConvexSet>,
        nodes: BTreeSet<NodeId>,
    ) -> Result<Self, ConceptError> {
        if sets.len() != schema.properties().len() {
            return Err(ConceptError::SchemaMismatch(alloc::format!("{} regions", sets.len())));
        }
        let regions = schema
            .properties()
            .iter()
            .zip(sets)
            .map(|(p, set)| {
                let set = match set {
                    ConvexSet::Full => ConvexSet::Full,
                    ConvexSet::Hull(points) => ConvexSet::hull(points)?,
                };
                Ok(PropertyRegion {
                    property: p.name.clone(),
                    set,
                })
            })
            .collect::<Result<_, ConceptError>>()?;
        let concept = Concept {
            regions,
            tree_set: TreeSet {
                signature: tree.signature(),
                nodes,
            },
        };
        concept.validate(schema)?;
        for &id in &concept.tree_set.nodes {
            tree.node(id)?;
        }
        if !tree.is_up_closed(&concept.tree_set.nodes) {
            return Err(ConceptError::NotUpClosed);
        }
        Ok(concept)
    }

    /// Every property [`ConvexSet::Full`] and only the root in the tree set.
    pub fn vacuous(schema: &PropertySchema, tree: &HypernymTree) -> Self {
        Concept {
            regions: schema
                .properties()
                .iter()
                .map(|p| PropertyRegion {
                    property: p.name.clone(),
                    set: ConvexSet::Full,
                })
                .collect(),
            tree_set: TreeSet {
                signature: tree.signature(),
                nodes: core::iter::once(tree.root()).collect(),
            },
        }
    }

    /// Checks region names, order, dimensions and domain membership.
    pub fn validate(&self, schema: &PropertySchema) -> Result<(), ConceptError> {
        let names: Vec<&str> = self.regions.iter().map(|r| r.property.as_str()).collect();
        if names != schema.names() {
            return Err(ConceptError::SchemaMismatch(names.join(",")));
        }
        for (r, p) in self.regions.iter().zip(schema.properties()) {
            if let ConvexSet::Hull(points) = &r.set {
                if points.is_empty() {
                    return Err(ConceptError::EmptyHull);
                }
                for pt in points {
                    if pt.dim() != p.dimension() {
                        return Err(ConceptError::WrongDimension {
                            property: p.name.clone(),
                            expected: p.dimension(),
                            found: pt.dim(),
                        });
                    }
                    if !p.domain.contains(pt) {
                        return Err(ConceptError::OutsideDomain {
                            adjective: pt.to_string(),
                            property: p.name.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Regions in schema order.
    pub fn regions(&self) -> &[PropertyRegion] {
        &self.regions
    }

    /// The region of a property.
    pub fn region(&self, property: &str) -> Option<&ConvexSet> {
        self.regions
            .iter()
            .find(|r| r.property.eq_ignore_ascii_case(property))
            .map(|r| &r.set)
    }

    /// The tree part.
    pub fn tree_set(&self) -> &TreeSet {
        &self.tree_set
    }
}

/// Words found next to a noun: adjectives and descriptor nouns.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Descriptors {
    /// Adjective phrases, first occurrence order, no repeats.
    pub adjectives: Vec<String>,
    /// Descriptor noun phrases, first occurrence order, no repeats.
    pub nouns: Vec<String>,
}

impl Descriptors {
    /// Builds descriptors, dropping repeats (case-insensitive).
    pub fn new<A, N>(adjectives: A, nouns: N) -> Self
    where
        A: IntoIterator,
        A::Item: Into<String>,
        N: IntoIterator,
        N::Item: Into<String>,
    {
        let mut d = Descriptors::default();
        for a in adjectives {
            push_unique(&mut d.adjectives, a.into());
        }
        for n in nouns {
            push_unique(&mut d.nouns, n.into());
        }
        d
    }

    /// Whether nothing was found.
    pub fn is_empty(&self) -> bool {
        self.adjectives.is_empty() && self.nouns.is_empty()
    }
}

fn push_unique(list: &mut Vec<String>, item: String) {
    let key = fold_phrase(&item);
    if !list.iter().any(|x| fold_phrase(x) == key) {
        list.push(item);
    }
}

fn occurs_at<S: AsRef<str>>(tokens: &[S], phrase: &[String], i: usize) -> bool {
    i + phrase.len() <= tokens.len() && phrase.iter().zip(&tokens[i..]).all(|(w, t)| fold(t.as_ref()) == *w)
}

/// Collects the descriptors of `noun` in `doc`: table adjectives and tree
/// labels occurring in the same sentence as the noun.
///
/// An adjective is skipped when one of `negators` occurs in the two tokens
/// before it. Returns empty descriptors when the noun does not occur.
pub fn extract_descriptors<S: AsRef<str>>(
    doc: &CorpusDoc,
    noun: &str,
    table: &AdjectiveValueTable,
    tree: &HypernymTree,
    negators: &[S],
) -> Descriptors {
    let target: Vec<String> = noun.split_whitespace().map(fold).collect();
    let negators: Vec<String> = negators.iter().map(|n| fold(n.as_ref())).collect();
    let mut found = Descriptors::default();
    if target.is_empty() {
        return found;
    }
    for sentence in &doc.sentences {
        // Merged multiword tokens are split back into words for matching.
        let words: Vec<String> = sentence
            .iter()
            .flat_map(|t| t.split_whitespace().map(ToString::to_string).collect::<Vec<_>>())
            .collect();
        if !(0..words.len()).any(|i| occurs_at(&words, &target, i)) {
            continue;
        }
        let mut i = 0;
        while i < words.len() {
            if occurs_at(&words, &target, i) {
                i += target.len();
                continue;
            }
            if let Some((entry, len)) = table.match_at(&words, i) {
                let negated = words[i.saturating_sub(2)..i]
                    .iter()
                    .any(|w| negators.contains(&fold(w)));
                if !negated {
                    push_unique(&mut found.adjectives, entry.adjective.clone());
                }
                i += len;
                continue;
            }
            if let Some((_, len)) = tree.match_at(&words, i) {
                push_unique(&mut found.nouns, words[i..i + len].join(" "));
                i += len;
                continue;
            }
            i += 1;
        }
    }
    found
}

/// A concept with a record of what could not be used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltConcept {
    /// The concept.
    pub concept: Concept,
    /// Adjectives missing from the value table.
    pub dropped_adjectives: Vec<String>,
    /// Descriptor nouns with no tree node.
    pub unresolved_nouns: Vec<String>,
}

/// Builds concepts from descriptors against one table, tree and schema.
#[derive(Debug, Clone, Copy)]
pub struct ConceptBuilder<'a> {
    schema: &'a PropertySchema,
    table: &'a AdjectiveValueTable,
    tree: &'a HypernymTree,
    lemmas: Option<&'a LemmaTable>,
}

impl<'a> ConceptBuilder<'a> {
    /// A builder without lemmatisation of descriptor nouns.
    pub fn new(schema: &'a PropertySchema, table: &'a AdjectiveValueTable, tree: &'a HypernymTree) -> Self {
        ConceptBuilder {
            schema,
            table,
            tree,
            lemmas: None,
        }
    }

    /// Also tries lemmas when resolving descriptor nouns ("torthaí" →
    /// "toradh").
    pub fn with_lemmas(mut self, lemmas: &'a LemmaTable) -> Self {
        self.lemmas = Some(lemmas);
        self
    }

    /// The tree node of a descriptor noun phrase.
    pub fn resolve_noun(&self, phrase: &str) -> Option<NodeId> {
        let lemma = |w: &str| -> Option<NodeId> {
            let l = self.lemmas?.lemma(w);
            if l == w {
                None
            } else {
                self.tree.find(l)
            }
        };
        self.tree.find(phrase).or_else(|| lemma(phrase)).or_else(|| {
            phrase
                .split_whitespace()
                .find_map(|w| self.tree.find(w).or_else(|| lemma(w)))
        })
    }

    /// Builds the concept for `descriptors`.
    ///
    /// Each property gets the hull of the values of its mentioned adjectives,
    /// or the full domain if none was mentioned; the tree set is the union
    /// of the root paths of the descriptor nouns.
    pub fn build(&self, descriptors: &Descriptors) -> Result<BuiltConcept, ConceptError> {
        let props = self.schema.properties();
        let mut points: Vec<Vec<Point>> = alloc::vec![Vec::new(); props.len()];
        let mut dropped = Vec::new();
        for adjective in &descriptors.adjectives {
            match self.table.lookup(adjective) {
                Some(row) => {
                    let idx = self
                        .schema
                        .index(&row.property)
                        .ok_or_else(|| ConceptError::UnknownProperty(row.property.clone()))?;
                    points[idx].push(row.point.clone());
                }
                None => dropped.push(adjective.clone()),
            }
        }
        let sets = points
            .into_iter()
            .map(|pts| {
                if pts.is_empty() {
                    Ok(ConvexSet::Full)
                } else {
                    ConvexSet::hull(pts)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut nodes = Vec::new();
        let mut unresolved = Vec::new();
        for noun in &descriptors.nouns {
            match self.resolve_noun(noun) {
                Some(id) => nodes.push(id),
                None => unresolved.push(noun.clone()),
            }
        }
        let concept = Concept {
            regions: props
                .iter()
                .zip(sets)
                .map(|(p, set)| PropertyRegion {
                    property: p.name.clone(),
                    set,
                })
                .collect(),
            tree_set: TreeSet::closure(self.tree, nodes)?,
        };
        Ok(BuiltConcept {
            concept,
            dropped_adjectives: dropped,
            unresolved_nouns: unresolved,
        })
    }
}

/// Builds a concept; adjectives missing from the table are dropped and
/// nouns missing from the tree are ignored.
pub fn build_concept(
    descriptors: &Descriptors,
    table: &AdjectiveValueTable,
    tree: &HypernymTree,
    schema: &PropertySchema,
) -> Result<Concept, ConceptError> {
    ConceptBuilder::new(schema, table, tree)
        .build(descriptors)
        .map(|b| b.concept)
}

/// Least common ancestor of `nodes`.
pub fn tree_join(tree: &HypernymTree, nodes: &[NodeId]) -> Result<NodeId, ConceptError> {
    tree.join(nodes)
}
