//! TOML text-preprocessing tables.
//!
//! ```toml
//! language = "en"
//! function_words = ["the", "a"]
//! negators = ["not"]
//!
//! [[multiword]]
//! kind = "name"              # or "phrase"
//! phrase = "Obi Wan"
//! canonical = "Obi-Wan"      # optional
//!
//! [lemmas]
//! "turns" = "turn"
//!
//! [[substitution]]
//! from = "she is pregnant"
//! to = "Padmé is pregnant"
//! ```

use std::collections::BTreeMap;

use discotrans_core::corpus::{LemmaTable, Multiword, MultiwordKind, MultiwordTable, Preprocessing, SubstitutionTable};
use discotrans_core::Language;
use serde::Deserialize;

use super::{parse_language, parse_toml};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TextFile {
    language: String,
    #[serde(default)]
    function_words: Vec<String>,
    #[serde(default)]
    negators: Vec<String>,
    #[serde(default)]
    multiword: Vec<MultiwordRecord>,
    #[serde(default)]
    lemmas: BTreeMap<String, String>,
    #[serde(default)]
    substitution: Vec<SubstitutionRecord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MultiwordRecord {
    kind: String,
    phrase: String,
    canonical: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SubstitutionRecord {
    from: String,
    to: String,
}

/// Preprocessing tables of one language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextTables {
    /// Language of the tables.
    pub language: Language,
    /// Multiwords, lemmas and substitutions.
    pub preprocessing: Preprocessing,
    /// Untyped words attached to the following word.
    pub function_words: Vec<String>,
    /// Words that cancel a following adjective in descriptor extraction.
    pub negators: Vec<String>,
}

impl TextTables {
    /// Multiwords of kind name only, as used for BLEU tokens.
    pub fn names(&self) -> MultiwordTable {
        self.preprocessing.multiwords.only(MultiwordKind::Name)
    }

    /// The lemma table.
    pub fn lemmas(&self) -> &LemmaTable {
        &self.preprocessing.lemmas
    }
}

/// Parses a text-table file; `name` labels errors.
pub fn parse_text_tables(source: &str, name: &str) -> Result<TextTables> {
    let file: TextFile = parse_toml(source, name)?;
    let mut multiwords = MultiwordTable::default();
    for r in &file.multiword {
        let kind = match r.kind.as_str() {
            "name" => MultiwordKind::Name,
            "phrase" => MultiwordKind::Phrase,
            other => return Err(Error::format(name, format!("unknown multiword kind `{other}`"))),
        };
        if r.phrase.split_whitespace().count() < 2 {
            return Err(Error::format(
                name,
                format!("multiword `{}` has fewer than two words", r.phrase),
            ));
        }
        multiwords.push(match &r.canonical {
            Some(c) => Multiword::with_canonical(kind, &r.phrase, c),
            None => Multiword::new(kind, &r.phrase),
        });
    }
    Ok(TextTables {
        language: parse_language(&file.language, name)?,
        preprocessing: Preprocessing {
            multiwords,
            lemmas: LemmaTable::new(file.lemmas),
            substitutions: SubstitutionTable::new(file.substitution.into_iter().map(|s| (s.from, s.to)).collect()),
        },
        function_words: file.function_words,
        negators: file.negators,
    })
}
