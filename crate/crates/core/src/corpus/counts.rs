//! Windowed co-occurrence counting.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::tokenize::{fold, CorpusDoc};
use super::CorpusError;
use crate::Language;

/// Prefix marking an adjective-argument basis column ("arg-evil").
pub const ARG_PREFIX: &str = "arg-";

/// Which neighbour an attributive adjective modifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModifierSide {
    /// The following token (English).
    Next,
    /// The preceding token (Irish).
    Previous,
}

impl ModifierSide {
    /// Attributive adjective position in `language`.
    pub fn for_language(language: Language) -> Self {
        match language {
            Language::English => ModifierSide::Next,
            Language::Irish => ModifierSide::Previous,
        }
    }

    /// Index of the token modified by the adjective at `i`.
    pub fn head(self, i: usize, len: usize) -> Option<usize> {
        match self {
            ModifierSide::Next => (i + 1 < len).then_some(i + 1),
            ModifierSide::Previous => i.checked_sub(1),
        }
    }
}

/// Co-occurrence counts of every token against a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CooccurrenceTable {
    basis: Vec<String>,
    counts: BTreeMap<String, Vec<u64>>,
}

impl CooccurrenceTable {
    /// Basis labels in column order.
    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    /// Counts for `word` (case-insensitive); `None` if it never occurs.
    pub fn get(&self, word: &str) -> Option<&[u64]> {
        self.counts.get(&fold(word)).map(Vec::as_slice)
    }

    /// Counts for `word`, or the zero vector.
    pub fn vector(&self, word: &str) -> Vec<u64> {
        self.get(word)
            .map(<[u64]>::to_vec)
            .unwrap_or_else(|| alloc::vec![0; self.basis.len()])
    }

    /// All counted words (case-folded) with their vectors.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &[u64])> {
        self.counts.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }
}

/// Counts, for every token `K` of `doc`, how often each basis word occurs
/// within `radius` tokens of `K` in the same sentence.
///
/// A basis label `arg-A` instead counts how often `K` occurs within
/// `radius` tokens of a word modified by the adjective `A`. Basis words get
/// the unit vector on their own column.
pub fn window_counts(doc: &CorpusDoc, basis: &[String], radius: usize) -> Result<CooccurrenceTable, CorpusError> {
    if basis.is_empty() {
        return Err(CorpusError::EmptyBasis);
    }
    if radius == 0 {
        return Err(CorpusError::ZeroWindow);
    }
    let side = ModifierSide::for_language(doc.language);
    let columns: Vec<Column> = basis
        .iter()
        .map(|b| match b.strip_prefix(ARG_PREFIX) {
            Some(adj) => Column::ArgumentOf(fold(adj)),
            None => Column::Word(fold(b)),
        })
        .collect();
    let dim = basis.len();
    let mut counts: BTreeMap<String, Vec<u64>> = BTreeMap::new();

    for sentence in &doc.sentences {
        let folded: Vec<String> = sentence.iter().map(|t| fold(t)).collect();
        let len = folded.len();
        for (p, key) in folded.iter().enumerate() {
            let row = counts.entry(key.clone()).or_insert_with(|| alloc::vec![0; dim]);
            let lo = p.saturating_sub(radius);
            let hi = (p + radius).min(len - 1);
            for (c, column) in columns.iter().enumerate() {
                let hits = (lo..=hi)
                    .filter(|&q| q != p)
                    .filter(|&q| match column {
                        Column::Word(w) => folded[q] == *w,
                        Column::ArgumentOf(adj) => folded
                            .iter()
                            .enumerate()
                            .any(|(a, t)| t == adj && side.head(a, len) == Some(q)),
                    })
                    .count();
                row[c] += hits as u64;
            }
        }
    }
    for (c, column) in columns.iter().enumerate() {
        let label = match column {
            Column::Word(w) => w.clone(),
            Column::ArgumentOf(_) => fold(&basis[c]),
        };
        let mut unit = alloc::vec![0; dim];
        unit[c] = 1;
        counts.insert(label, unit);
    }
    Ok(CooccurrenceTable {
        basis: basis.to_vec(),
        counts,
    })
}

enum Column {
    Word(String),
    ArgumentOf(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn doc(lang: Language, sentences: &[&str]) -> CorpusDoc {
        CorpusDoc {
            language: lang,
            sentences: sentences
                .iter()
                .map(|s| s.split(' ').map(ToString::to_string).collect())
                .collect(),
        }
    }

    fn basis(words: &[&str]) -> Vec<String> {
        words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn basis_words_are_unit_vectors() {
        let d = doc(Language::English, &["Anakin meets Palpatine"]);
        let t = window_counts(&d, &basis(&["Anakin", "Palpatine"]), 3).unwrap();
        assert_eq!(t.vector("Anakin"), [1, 0]);
        assert_eq!(t.vector("palpatine"), [0, 1]);
        assert_eq!(t.vector("meets"), [1, 1]);
        assert_eq!(t.vector("Yoda"), [0, 0]);
    }

    #[test]
    fn window_respects_radius_and_sentences() {
        let d = doc(Language::English, &["x a b c d Anakin", "x", "Anakin"]);
        let t = window_counts(&d, &basis(&["Anakin"]), 3).unwrap();
        assert_eq!(t.vector("x"), [0]);
        assert_eq!(t.vector("c"), [1]);
    }

    #[test]
    fn adjective_argument_column() {
        let d = doc(Language::English, &["the evil Emperor meets Palpatine"]);
        let t = window_counts(&d, &basis(&["Palpatine", "arg-evil"]), 3).unwrap();
        // Palpatine is two tokens from "Emperor", which "evil" modifies.
        assert_eq!(t.vector("Palpatine"), [1, 0]);
        assert_eq!(t.vector("meets"), [1, 1]);
        assert_eq!(t.vector("arg-evil"), [0, 1]);
        let ga = doc(Language::Irish, &["Impire olc Vader"]);
        let t = window_counts(&ga, &basis(&["Palpatine", "arg-olc"]), 3).unwrap();
        assert_eq!(t.vector("Vader"), [0, 1]);
    }

    #[test]
    fn configuration_errors() {
        let d = doc(Language::English, &["a"]);
        assert_eq!(window_counts(&d, &[], 3), Err(CorpusError::EmptyBasis));
        assert_eq!(window_counts(&d, &basis(&["a"]), 0), Err(CorpusError::ZeroWindow));
    }
}
