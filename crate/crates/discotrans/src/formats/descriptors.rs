//! TOML descriptor tables: the adjectives and nouns recorded for each
//! concept noun.
//!
//! ```toml
//! language = "en"
//!
//! [[noun]]
//! name = "Mars"
//! adjectives = ["very red", "cold"]
//! nouns = ["planet"]
//! ```

use discotrans_core::concepts::Descriptors;
use discotrans_core::Language;
use serde::Deserialize;

use super::{parse_language, parse_toml};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DescriptorFile {
    language: String,
    #[serde(default)]
    noun: Vec<NounRecord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NounRecord {
    name: String,
    #[serde(default)]
    adjectives: Vec<String>,
    #[serde(default)]
    nouns: Vec<String>,
}

/// Descriptor table of one language, in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescriptorTable {
    /// Language of the descriptors.
    pub language: Language,
    /// `(noun, descriptors)` pairs.
    pub nouns: Vec<(String, Descriptors)>,
}

impl DescriptorTable {
    /// Descriptors recorded for `noun` (case-insensitive).
    pub fn get(&self, noun: &str) -> Option<&Descriptors> {
        let key = discotrans_core::corpus::fold(noun);
        self.nouns
            .iter()
            .find(|(n, _)| discotrans_core::corpus::fold(n) == key)
            .map(|(_, d)| d)
    }
}

/// Parses a descriptor file; `name` labels errors.
pub fn parse_descriptors(source: &str, name: &str) -> Result<DescriptorTable> {
    let file: DescriptorFile = parse_toml(source, name)?;
    let mut table = DescriptorTable {
        language: parse_language(&file.language, name)?,
        nouns: Vec::with_capacity(file.noun.len()),
    };
    for record in file.noun {
        if table.get(&record.name).is_some() {
            return Err(Error::format(name, format!("noun `{}` listed twice", record.name)));
        }
        table
            .nouns
            .push((record.name, Descriptors::new(record.adjectives, record.nouns)));
    }
    Ok(table)
}
