//! Core algorithms for checking English/Irish translations two ways.
//!
//! The first route types a sentence with a pregroup lexicon, reduces the
//! type sequence to the sentence type and contracts word vectors along the
//! reduction to obtain a meaning in `N ⊗ N`; meanings in two languages are
//! compared by cosine similarity over an aligned noun basis. BLEU is
//! provided as the surface-level baseline.
//!
//! The second route builds a conceptual-space concept for a noun (convex
//! regions per property plus a set of hypernym-tree nodes) and translates
//! nouns by nearest concept under a Hausdorff-style distance.
//!
//! # Modules
//!
//! - [`grammar`]: pregroup types, lexicon, type assignment and reduction.
//! - [`corpus`]: sentence splitting, multiword merging and window counts.
//! - [`distrib`]: word vectors, verb matrices and sentence evaluation.
//! - [`bleu`]: clipped n-gram precision, brevity penalty, smoothing.
//! - [`concepts`]: property schema, hypernym trees and concept building.
//! - [`metric`]: Hausdorff and tree-set distances, nearest-concept lookup.
//! - [`lp`]: a small simplex solver used for point-to-hull distances.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod bleu;
pub mod concepts;
pub mod corpus;
pub mod distrib;
pub mod grammar;
mod lang;
pub mod lp;
pub mod metric;
pub mod numeric;

pub use lang::{Language, UnknownLanguage};
