//! Adjective value tables: where each adjective sits in its property space.

use alloc::string::String;
use alloc::vec::Vec;

use super::schema::{Point, PropertySchema};
use super::{fold_phrase, ConceptError};
use crate::Language;

/// One table row: an adjective (possibly several words) and its point.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjectiveValue {
    /// The adjective as written ("same size as Earth").
    pub adjective: String,
    /// Property name in the schema.
    pub property: String,
    /// Value in the property's domain.
    pub point: Point,
}

/// The adjectives of one language with their property values.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjectiveValueTable {
    language: Language,
    entries: Vec<AdjectiveValue>,
    keys: Vec<String>,
    longest: usize,
}

impl AdjectiveValueTable {
    /// Validates entries against `schema`: known property, matching
    /// dimension, point inside the domain, no repeated adjective.
    pub fn new(
        language: Language,
        entries: Vec<AdjectiveValue>,
        schema: &PropertySchema,
    ) -> Result<Self, ConceptError> {
        let mut keys: Vec<String> = Vec::with_capacity(entries.len());
        for e in &entries {
            let property = schema
                .get(&e.property)
                .ok_or_else(|| ConceptError::UnknownProperty(e.property.clone()))?;
            if property.dimension() != e.point.dim() {
                return Err(ConceptError::WrongDimension {
                    property: e.property.clone(),
                    expected: property.dimension(),
                    found: e.point.dim(),
                });
            }
            if !property.domain.contains(&e.point) {
                return Err(ConceptError::OutsideDomain {
                    adjective: e.adjective.clone(),
                    property: e.property.clone(),
                });
            }
            let key = fold_phrase(&e.adjective);
            if key.is_empty() {
                return Err(ConceptError::EmptyAdjective);
            }
            if keys.contains(&key) {
                return Err(ConceptError::DuplicateAdjective(e.adjective.clone()));
            }
            keys.push(key);
        }
        let longest = keys.iter().map(|k| k.split(' ').count()).max().unwrap_or(0);
        Ok(AdjectiveValueTable {
            language,
            entries,
            keys,
            longest,
        })
    }

    /// Language of the adjectives.
    pub fn language(&self) -> Language {
        self.language
    }

    /// Rows in file order.
    pub fn entries(&self) -> &[AdjectiveValue] {
        &self.entries
    }

    /// The row for `adjective` (case-insensitive, whitespace-normalised).
    pub fn lookup(&self, adjective: &str) -> Option<&AdjectiveValue> {
        let key = fold_phrase(adjective);
        self.keys.iter().position(|k| *k == key).map(|i| &self.entries[i])
    }

    /// Longest adjective matching `tokens` from `start`, with its length in
    /// tokens.
    pub fn match_at<S: AsRef<str>>(&self, tokens: &[S], start: usize) -> Option<(&AdjectiveValue, usize)> {
        let mut best = None;
        let mut phrase = String::new();
        for (k, t) in tokens[start..].iter().take(self.longest).enumerate() {
            if k > 0 {
                phrase.push(' ');
            }
            phrase.push_str(t.as_ref());
            if let Some(e) = self.lookup(&phrase) {
                best = Some((e, k + 1));
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn row(adjective: &str, property: &str, coords: &[f64]) -> AdjectiveValue {
        AdjectiveValue {
            adjective: adjective.to_string(),
            property: property.to_string(),
            point: Point::new(coords.to_vec()).unwrap(),
        }
    }

    #[test]
    fn validates_rows() {
        let s = PropertySchema::standard();
        let ok = AdjectiveValueTable::new(Language::English, vec![row("hot", "temperature", &[0.75])], &s);
        assert!(ok.is_ok());
        let bad = |r| AdjectiveValueTable::new(Language::English, vec![r], &s).unwrap_err();
        assert!(matches!(
            bad(row("hot", "smell", &[0.5])),
            ConceptError::UnknownProperty(_)
        ));
        assert!(matches!(
            bad(row("red", "colour", &[1.0])),
            ConceptError::WrongDimension { .. }
        ));
        assert!(matches!(
            bad(row("hot", "temperature", &[1.5])),
            ConceptError::OutsideDomain { .. }
        ));
        let dup = AdjectiveValueTable::new(
            Language::English,
            vec![row("hot", "temperature", &[0.75]), row("Hot", "temperature", &[0.7])],
            &s,
        );
        assert!(matches!(dup, Err(ConceptError::DuplicateAdjective(_))));
    }

    #[test]
    fn longest_match_wins() {
        let s = PropertySchema::standard();
        let t = AdjectiveValueTable::new(
            Language::English,
            vec![
                row("freezing", "temperature", &[0.0]),
                row("freezing cold", "temperature", &[0.0]),
                row("cold", "temperature", &[0.4]),
            ],
            &s,
        )
        .unwrap();
        let toks = ["it", "is", "Freezing", "cold"];
        let (e, n) = t.match_at(&toks, 2).unwrap();
        assert_eq!((e.adjective.as_str(), n), ("freezing cold", 2));
        assert_eq!(t.match_at(&toks, 3).unwrap().0.point.coords(), &[0.4]);
        assert!(t.match_at(&toks, 0).is_none());
    }
}
