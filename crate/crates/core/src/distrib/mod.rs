//! Compositional distributional meanings.
//!
//! Nouns are vectors over a small basis of frequent words, adjectives are
//! vectors applied pointwise, and transitive verbs are matrices relating
//! subjects to objects. A reduced sentence evaluates to an element of the
//! sentence space `S = N ⊗ N`, indexed subject first; two sentences are
//! compared by the cosine of their meanings. All arithmetic is exact.

mod build;
mod evaluate;
mod meaning;
mod model;

use alloc::string::String;

pub use build::{build_adjective_vector, build_modifier_vector, build_verb_matrix, noun_vectors};
pub use evaluate::evaluate;
pub use meaning::{compare, inner, length, similarity, SentenceMeaning, Similarity};
pub use model::{DistribModel, NounVector, Orientation, VerbMatrix, WordKind, WordMap};

/// Errors raised while building or evaluating meanings.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DistribError {
    /// A word the sentence needs has no meaning in the model.
    #[error("no {kind} for `{word}`")]
    MissingWord {
        /// The word's model key.
        word: String,
        /// What was looked up.
        kind: WordKind,
    },
    /// Two vectors or matrices over different bases were combined.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch {
        /// Dimension of the left operand.
        left: usize,
        /// Dimension of the right operand.
        right: usize,
    },
    /// A coefficient was negative.
    #[error("meaning coefficients must be non-negative")]
    NegativeEntry,
    /// Unrecognised orientation name.
    #[error("unknown orientation `{0}` (expected subject-object or object-subject)")]
    UnknownOrientation(String),
    /// The plan does not leave exactly one sentence wire open.
    #[error("the reduction does not end in a single sentence type")]
    NotReduced,
    /// A construction outside the evaluated fragment.
    #[error("unsupported construction: {0}")]
    Unsupported(String),
}
