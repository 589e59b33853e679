//! Readers and writers for the on-disk formats.
//!
//! | file | format |
//! |---|---|
//! | lexicon | TOML, one `[[entry]]` per surface form |
//! | model | TOML: basis, noun/adjective/preposition vectors, verb matrices |
//! | text tables | TOML: multiwords, lemmas, substitutions, particles |
//! | hypernym tree | lines `id parent label | synonym ...` |
//! | adjective values | lines `adjective | property | value` |
//! | descriptors | TOML, one `[[noun]]` per concept |
//! | concept | JSON, see [`concept_json`] |

pub mod adjectives;
pub mod concept_json;
pub mod descriptors;
pub mod lexicon;
pub mod model;
pub mod text;
pub mod tree;

use discotrans_core::Language;

use crate::error::{Error, Result};

pub(crate) fn parse_toml<T: serde::de::DeserializeOwned>(source: &str, name: &str) -> Result<T> {
    toml::from_str(source).map_err(|e| Error::format(name, e.to_string()))
}

pub(crate) fn parse_language(code: &str, name: &str) -> Result<Language> {
    code.parse()
        .map_err(|e: discotrans_core::UnknownLanguage| Error::format(name, e.to_string()))
}

/// Non-empty lines with comments (`#` to end of line) removed, paired with
/// their one-based line numbers.
pub(crate) fn content_lines(source: &str) -> impl Iterator<Item = (usize, &str)> {
    source.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}
