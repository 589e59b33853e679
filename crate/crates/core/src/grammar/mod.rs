//! Pregroup grammar: types, the bilingual lexicon and sentence reduction.
//!
//! A sentence is grammatical when the juxtaposition of its word types
//! reduces to the sentence type `s` using only the cancellations
//! `x^l · x → 1` and `x · x^r → 1`.
//!
//! # Lexicon conventions
//!
//! | category | English | Irish |
//! |---|---|---|
//! | noun | `n` | `n` |
//! | transitive verb, copula | `n^r s n^l` | `s n^l n^l` |
//! | adjective | `n n^l` | `n^r n` |
//! | adverb | `s^r s` | `s^r s` |
//! | preposition phrase | `n^r n` | `n^r n` |
//! | subject relative pronoun | `n^r n s^l n` | `n^r n n^ll s^l` |
//! | object relative pronoun | `n^r n n^ll s^l` | `n^r n n^ll s^l` |
//!
//! Irish transitive verbs order their arguments verb-subject-object, the
//! Irish copula verb-object-subject. Determiners and particles carry no type
//! and are attached to the following word before typing.

mod assign;
mod lexicon;
mod reduce;
mod types;

use alloc::string::String;

pub use assign::{assign_types, assign_types_with_hints, parse, reduce_typed, Parse, TypedToken};
pub use lexicon::{ArgumentOrder, Category, Lexicon, LexiconEntry, Role};
pub use reduce::{reduce, reduce_to, CopyNode, Pairing, ReductionPlan, UnitNode, Wire};
pub use types::{adjoint, display_sequence, BasicType, PregroupType, Side, SimpleType, MAX_ADJOINT, MIN_ADJOINT};

use crate::Language;

/// Errors raised by type parsing, lexicon lookup and reduction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrammarError {
    /// An adjoint order left the supported range.
    #[error("adjoint order {order} of `{base}` is outside [-2, 2]")]
    AdjointOutOfRange {
        /// Basic type being shifted.
        base: BasicType,
        /// Offending order.
        order: i32,
    },
    /// A type string could not be parsed.
    #[error("cannot parse simple type `{0}`")]
    TypeSyntax(String),
    /// A type string contained no factors.
    #[error("empty type string")]
    EmptyType,
    /// Unrecognised category name.
    #[error("unknown category `{0}`")]
    UnknownCategory(String),
    /// Unrecognised argument order name.
    #[error("unknown argument order `{0}`")]
    UnknownArgumentOrder(String),
    /// A lexicon entry broke the category rules.
    #[error("lexicon entry `{surface}`: {reason}")]
    InvalidEntry {
        /// Surface form of the entry.
        surface: String,
        /// What is wrong with it.
        reason: String,
    },
    /// No lexicon entry for a token.
    #[error("no {language} lexicon entry for `{token}`")]
    UnknownToken {
        /// The token.
        token: String,
        /// Language searched.
        language: Language,
    },
    /// Several entries of different categories match a token.
    #[error("`{token}` is ambiguous between {candidates}")]
    Ambiguous {
        /// The token.
        token: String,
        /// Candidate categories, comma separated.
        candidates: String,
    },
    /// No reduction to the target type exists.
    #[error("not a sentence: closest residual type is `{residual}`")]
    NotASentence {
        /// Shortest residual reached by the search.
        residual: PregroupType,
    },
    /// Nothing to reduce.
    #[error("empty input")]
    EmptyInput,
    /// A plan's pairings do not describe a valid reduction.
    #[error("reduction plan is inconsistent with its wires")]
    InvalidPlan,
}
