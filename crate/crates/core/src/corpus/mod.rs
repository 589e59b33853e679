//! Corpus ingestion: sentence splitting, tokenisation, multiword merging,
//! lemmatisation and windowed co-occurrence counts.
//!
//! Windows are measured in merged tokens and never cross a sentence
//! boundary. Token case is preserved; all lookups ignore case.

mod counts;
mod tokenize;

pub use counts::{window_counts, CooccurrenceTable, ModifierSide, ARG_PREFIX};
pub use tokenize::{
    attach_function_words, fold, segment_and_tokenize, split_sentences, split_words, tokenize_sentence, CorpusDoc,
    LemmaTable, Multiword, MultiwordKind, MultiwordTable, Preprocessing, SubstitutionTable, Unit,
};

/// Errors raised while counting.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorpusError {
    /// No basis words were supplied.
    #[error("the basis is empty")]
    EmptyBasis,
    /// A window radius of zero counts nothing.
    #[error("window radius must be at least 1")]
    ZeroWindow,
}
