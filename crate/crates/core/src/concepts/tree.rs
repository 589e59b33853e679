//! Hypernym trees: rooted trees of labelled nodes ordered by "is a kind of".

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{fold_phrase, ConceptError};

/// Identifier of a tree node, written `e0`, `e1`, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl FromStr for NodeId {
    type Err = ConceptError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s
            .strip_prefix('e')
            .map(|d| d.strip_prefix('_').unwrap_or(d))
            .ok_or_else(|| ConceptError::BadNodeId(s.into()))?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ConceptError::BadNodeId(s.into()));
        }
        digits
            .parse()
            .map(NodeId)
            .map_err(|_| ConceptError::BadNodeId(s.into()))
    }
}

/// One node as declared in a tree file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    /// Node id.
    pub id: NodeId,
    /// Parent, `None` for the root.
    pub parent: Option<NodeId>,
    /// Labels in this tree's language; the first is the display label.
    pub labels: Vec<String>,
}

/// Structural fingerprint of a tree: a hash of its `(id, parent)` pairs.
///
/// Trees in different languages with the same fingerprint share node ids
/// and are directly comparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeSignature(pub u64);

impl fmt::Display for TreeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

impl FromStr for TreeSignature {
    type Err = ConceptError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        u64::from_str_radix(s, 16)
            .map(TreeSignature)
            .map_err(|_| ConceptError::BadSignature(s.into()))
    }
}

/// A validated hypernym tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypernymTree {
    nodes: BTreeMap<NodeId, TreeNode>,
    root: NodeId,
}

impl HypernymTree {
    /// Validates and builds a tree: unique ids, one root, known parents, no
    /// cycles.
    pub fn new(nodes: Vec<TreeNode>) -> Result<Self, ConceptError> {
        let mut map = BTreeMap::new();
        for node in nodes {
            let id = node.id;
            if map.insert(id, node).is_some() {
                return Err(ConceptError::InvalidTree(alloc::format!("duplicate node {id}")));
            }
        }
        let roots: Vec<NodeId> = map.values().filter(|n| n.parent.is_none()).map(|n| n.id).collect();
        let root = match roots.as_slice() {
            [r] => *r,
            [] => return Err(ConceptError::InvalidTree("no root".into())),
            _ => return Err(ConceptError::InvalidTree("more than one root".into())),
        };
        for node in map.values() {
            if let Some(p) = node.parent {
                if !map.contains_key(&p) {
                    return Err(ConceptError::InvalidTree(alloc::format!(
                        "{} has unknown parent {p}",
                        node.id
                    )));
                }
            }
        }
        // Every node must reach the root within `len` steps.
        for &start in map.keys() {
            let mut cur = start;
            let mut steps = 0;
            while let Some(p) = map[&cur].parent {
                cur = p;
                steps += 1;
                if steps > map.len() {
                    return Err(ConceptError::InvalidTree(alloc::format!("cycle through {start}")));
                }
            }
        }
        Ok(HypernymTree { nodes: map, root })
    }

    /// The root node.
    pub fn root(&self) -> NodeId {
        self.root
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Whether the tree is empty (never true for a validated tree).
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node ids in ascending order.
    pub fn ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes.keys().copied()
    }

    /// A node by id.
    pub fn node(&self, id: NodeId) -> Result<&TreeNode, ConceptError> {
        self.nodes.get(&id).ok_or(ConceptError::UnknownNode(id))
    }

    /// Whether `id` is in the tree.
    pub fn contains(&self, id: NodeId) -> bool {
        self.nodes.contains_key(&id)
    }

    /// Parent of `id`.
    pub fn parent(&self, id: NodeId) -> Result<Option<NodeId>, ConceptError> {
        Ok(self.node(id)?.parent)
    }

    /// The path from `id` up to the root, starting with `id`.
    pub fn path_to_root(&self, id: NodeId) -> Result<Vec<NodeId>, ConceptError> {
        let mut path = Vec::new();
        let mut cur = Some(id);
        while let Some(c) = cur {
            path.push(c);
            cur = self.node(c)?.parent;
        }
        Ok(path)
    }

    /// Union of root paths of `ids`; always contains the root.
    pub fn up_closure<I>(&self, ids: I) -> Result<BTreeSet<NodeId>, ConceptError>
    where
        I: IntoIterator<Item = NodeId>,
    {
        let mut set = BTreeSet::new();
        set.insert(self.root);
        for id in ids {
            set.extend(self.path_to_root(id)?);
        }
        Ok(set)
    }

    /// Whether `set` is closed under taking parents and contains the root.
    pub fn is_up_closed(&self, set: &BTreeSet<NodeId>) -> bool {
        set.contains(&self.root)
            && set
                .iter()
                .all(|&id| matches!(self.parent(id), Ok(p) if p.is_none_or(|p| set.contains(&p))))
    }

    /// Least common ancestor of `ids`.
    pub fn join(&self, ids: &[NodeId]) -> Result<NodeId, ConceptError> {
        let (first, rest) = ids.split_first().ok_or(ConceptError::EmptyJoin)?;
        let mut common = self.path_to_root(*first)?;
        for &id in rest {
            let path: BTreeSet<NodeId> = self.path_to_root(id)?.into_iter().collect();
            common.retain(|n| path.contains(n));
        }
        // Paths are ordered bottom-up, so the first shared node is lowest.
        Ok(common[0])
    }

    /// The node carrying `label` exactly (case-insensitive).
    pub fn find(&self, label: &str) -> Option<NodeId> {
        let key = fold_phrase(label);
        self.nodes
            .values()
            .find(|n| n.labels.iter().any(|l| fold_phrase(l) == key))
            .map(|n| n.id)
    }

    /// Resolves a descriptor phrase: an exact label match, else the first
    /// word of the phrase that is itself a label ("Earth's sister" → sister).
    pub fn resolve(&self, phrase: &str) -> Option<NodeId> {
        self.find(phrase)
            .or_else(|| phrase.split_whitespace().find_map(|w| self.find(w)))
    }

    /// Longest label matching `tokens` starting at `start`, with its length
    /// in tokens.
    pub fn match_at<S: AsRef<str>>(&self, tokens: &[S], start: usize) -> Option<(NodeId, usize)> {
        let mut best = None;
        let mut phrase = String::new();
        for (k, t) in tokens[start..].iter().enumerate() {
            if k > 0 {
                phrase.push(' ');
            }
            phrase.push_str(t.as_ref());
            if let Some(id) = self.find(&phrase) {
                best = Some((id, k + 1));
            }
            if k >= 5 {
                break;
            }
        }
        best
    }

    /// The display label of `id`.
    pub fn label(&self, id: NodeId) -> Option<&str> {
        self.nodes.get(&id).and_then(|n| n.labels.first()).map(String::as_str)
    }

    /// Whether `other` declares the same ids with the same parents.
    pub fn same_structure(&self, other: &HypernymTree) -> bool {
        self.nodes.len() == other.nodes.len()
            && self
                .nodes
                .iter()
                .zip(&other.nodes)
                .all(|((a, na), (b, nb))| a == b && na.parent == nb.parent)
    }

    /// FNV-1a hash of the `(id, parent)` structure.
    pub fn signature(&self) -> TreeSignature {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut eat = |v: u32| {
            for b in v.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(PRIME);
            }
        };
        for n in self.nodes.values() {
            eat(n.id.0);
            eat(n.parent.map_or(u32::MAX, |p| p.0));
        }
        TreeSignature(h)
    }
}
