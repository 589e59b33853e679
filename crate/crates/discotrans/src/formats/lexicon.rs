//! TOML lexicon files.
//!
//! ```toml
//! language = "ga"
//!
//! [[entry]]
//! surface = "Casann"
//! category = "transitive-verb"
//! type = "s nl nl"
//! order = "vso"      # optional, defaults by category and language
//! lemma = "cas"      # optional model key
//! ```
//!
//! `type` may be omitted, in which case the category's type is used; when
//! given it must agree with the category. An entry may override the file's
//! `language`.

use discotrans_core::grammar::{ArgumentOrder, Category, Lexicon, LexiconEntry, PregroupType};
use discotrans_core::Language;
use serde::Deserialize;

use super::{parse_language, parse_toml};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LexiconFile {
    language: Option<String>,
    #[serde(default)]
    entry: Vec<EntryRecord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryRecord {
    surface: String,
    category: String,
    language: Option<String>,
    #[serde(rename = "type")]
    ptype: Option<String>,
    order: Option<String>,
    lemma: Option<String>,
    object: Option<String>,
}

/// Parses a lexicon file; `name` labels errors.
pub fn parse_lexicon(source: &str, name: &str) -> Result<Lexicon> {
    let file: LexiconFile = parse_toml(source, name)?;
    let default_language = file.language.as_deref().map(|l| parse_language(l, name)).transpose()?;
    let mut entries = Vec::with_capacity(file.entry.len());
    for record in file.entry {
        let context = |message: String| Error::format(name, format!("entry `{}`: {message}", record.surface));
        let language: Language = match record.language.as_deref() {
            Some(l) => parse_language(l, name)?,
            None => default_language.ok_or_else(|| context("no language given".into()))?,
        };
        let category: Category = record
            .category
            .parse()
            .map_err(|e: discotrans_core::grammar::GrammarError| context(e.to_string()))?;
        let mut entry = LexiconEntry::new(record.surface.clone(), language, category);
        if let Some(t) = &record.ptype {
            entry.ptype = t.parse::<PregroupType>().map_err(|e| context(e.to_string()))?;
        }
        if let Some(o) = &record.order {
            entry.argument_order = Some(o.parse::<ArgumentOrder>().map_err(|e| context(e.to_string()))?);
        }
        entry.lemma = record.lemma.clone();
        entry.object = record.object.clone();
        entries.push(entry);
    }
    Ok(Lexicon::new(entries)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_entries_with_defaults() {
        let lex = parse_lexicon(
            r#"
            language = "ga"
            [[entry]]
            surface = "Casann"
            category = "transitive-verb"
            lemma = "cas"
            [[entry]]
            surface = "Impire"
            category = "noun"
            type = "n"
            "#,
            "test",
        )
        .unwrap();
        let cas = &lex.entries()[0];
        assert_eq!(cas.ptype.to_string(), "s n^l n^l");
        assert_eq!(cas.argument_order, Some(ArgumentOrder::VerbSubjectObject));
        assert_eq!(cas.key(), "cas");
    }

    #[test]
    fn rejects_a_type_that_contradicts_the_category() {
        let err = parse_lexicon(
            "language = \"en\"\n[[entry]]\nsurface = \"evil\"\ncategory = \"adjective\"\ntype = \"nr n\"\n",
            "test",
        )
        .unwrap_err();
        assert!(err.to_string().contains("does not match"), "{err}");
    }

    #[test]
    fn rejects_unknown_fields_and_categories() {
        assert!(parse_lexicon("[[entry]]\nsurface = \"x\"\ncategory = \"noun\"\ncolour = 1\n", "t").is_err());
        assert!(parse_lexicon(
            "language = \"en\"\n[[entry]]\nsurface = \"x\"\ncategory = \"verbish\"\n",
            "t"
        )
        .is_err());
        assert!(parse_lexicon("[[entry]]\nsurface = \"x\"\ncategory = \"noun\"\n", "t").is_err());
    }
}
