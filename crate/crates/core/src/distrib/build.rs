//! Building vectors and matrices from a tokenised corpus.

use alloc::string::String;
use alloc::vec::Vec;

use super::model::{NounVector, Orientation, VerbMatrix, WordMap};
use crate::corpus::{fold, CooccurrenceTable, CorpusDoc, ModifierSide};
use crate::grammar::ArgumentOrder;

/// Noun vectors for `words`, read from co-occurrence counts (zero vectors
/// for words that never occur).
pub fn noun_vectors<S: AsRef<str>>(table: &CooccurrenceTable, words: &[S]) -> WordMap<NounVector> {
    words
        .iter()
        .map(|w| {
            let w = w.as_ref();
            (String::from(w), NounVector::from_ints(&table.vector(w)))
        })
        .collect()
}

fn find_nouns<'a>(sentence: &'a [String], nouns: &'a WordMap<NounVector>) -> impl Iterator<Item = usize> + 'a {
    sentence
        .iter()
        .enumerate()
        .filter(|(_, t)| nouns.contains(t))
        .map(|(i, _)| i)
}

/// Sums `subject ⊗ object` over the transitive uses of `verb` in `doc`.
///
/// Arguments are located by word order: for SVO the nearest known noun on
/// each side of the verb, for VSO/VOS the first two known nouns after it.
/// Uses without both arguments (e.g. a copula followed by an adjective) are
/// skipped. The result has the requested storage orientation; a verb that
/// never occurs gives the zero matrix.
pub fn build_verb_matrix(
    doc: &CorpusDoc,
    verb: &str,
    nouns: &WordMap<NounVector>,
    order: ArgumentOrder,
    orientation: Orientation,
    dim: usize,
) -> VerbMatrix {
    let mut matrix = VerbMatrix::zeros(dim, orientation);
    let verb = fold(verb);
    for sentence in &doc.sentences {
        let positions: Vec<usize> = find_nouns(sentence, nouns).collect();
        for (v, _) in sentence.iter().enumerate().filter(|(_, t)| fold(t) == verb) {
            let args = match order {
                ArgumentOrder::SubjectVerbObject => {
                    let before = positions.iter().rev().find(|&&p| p < v);
                    let after = positions.iter().find(|&&p| p > v);
                    before.zip(after).map(|(&s, &o)| (s, o))
                }
                ArgumentOrder::VerbSubjectObject | ArgumentOrder::VerbObjectSubject => {
                    let mut after = positions.iter().filter(|&&p| p > v);
                    match (after.next(), after.next()) {
                        (Some(&a), Some(&b)) if order == ArgumentOrder::VerbSubjectObject => Some((a, b)),
                        (Some(&a), Some(&b)) => Some((b, a)),
                        _ => None,
                    }
                }
            };
            let Some((s, o)) = args else { continue };
            let (Some(subject), Some(object)) = (nouns.get(&sentence[s]), nouns.get(&sentence[o])) else {
                continue;
            };
            if subject.dim() != dim || object.dim() != dim {
                continue;
            }
            for (i, a) in subject.coords().iter().enumerate() {
                for (j, b) in object.coords().iter().enumerate() {
                    matrix.add_subject_object(i, j, a * b);
                }
            }
        }
    }
    matrix
}

/// Sums the vectors of the nouns that `modifier` attaches to in `doc`.
///
/// Used both for adjectives and for preposition phrases; `side` says
/// whether the modified noun precedes or follows the modifier.
pub fn build_modifier_vector(
    doc: &CorpusDoc,
    modifier: &str,
    nouns: &WordMap<NounVector>,
    side: ModifierSide,
    dim: usize,
) -> NounVector {
    let modifier = fold(modifier);
    let mut sum = NounVector::zeros(dim);
    for sentence in &doc.sentences {
        for (i, _) in sentence.iter().enumerate().filter(|(_, t)| fold(t) == modifier) {
            let Some(h) = side.head(i, sentence.len()) else {
                continue;
            };
            if let Some(v) = nouns.get(&sentence[h]) {
                if let Ok(s) = sum.add(v) {
                    sum = s;
                }
            }
        }
    }
    sum
}

/// Adjective vector: the sum of the vectors of the nouns it modifies.
pub fn build_adjective_vector(doc: &CorpusDoc, adjective: &str, nouns: &WordMap<NounVector>, dim: usize) -> NounVector {
    build_modifier_vector(doc, adjective, nouns, ModifierSide::for_language(doc.language), dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;
    use crate::Language;
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

    fn units() -> WordMap<NounVector> {
        let mut m = WordMap::new();
        m.insert("Anakin", NounVector::unit(2, 0));
        m.insert("Palpatine", NounVector::unit(2, 1));
        m
    }

    #[test]
    fn single_svo_occurrence() {
        let d = doc(Language::English, &["Anakin turn Palpatine", "Anakin is brave"]);
        let m = build_verb_matrix(
            &d,
            "turn",
            &units(),
            ArgumentOrder::SubjectVerbObject,
            Orientation::SubjectObject,
            2,
        );
        assert_eq!(m.rows()[0][1], Rational::from_integer(1));
        assert_eq!(m.rows()[1][0], Rational::from_integer(0));
        let none = build_verb_matrix(
            &d,
            "is",
            &units(),
            ArgumentOrder::SubjectVerbObject,
            Orientation::SubjectObject,
            2,
        );
        assert_eq!(none, VerbMatrix::zeros(2, Orientation::SubjectObject));
    }

    #[test]
    fn vso_stored_object_first() {
        let d = doc(Language::Irish, &["casann Anakin Palpatine"]);
        let m = build_verb_matrix(
            &d,
            "casann",
            &units(),
            ArgumentOrder::VerbSubjectObject,
            Orientation::ObjectSubject,
            2,
        );
        // subject Anakin (0), object Palpatine (1), stored at [object][subject]
        assert_eq!(m.rows()[1][0], Rational::from_integer(1));
        assert_eq!(m.subject_object(0, 1), Rational::from_integer(1));
    }

    #[test]
    fn adjective_sums_modified_nouns() {
        let d = doc(Language::English, &["brave Anakin meets brave Palpatine", "brave"]);
        let v = build_adjective_vector(&d, "brave", &units(), 2);
        assert_eq!(v, NounVector::from_ints(&[1, 1]));
        let ga = doc(Language::Irish, &["Anakin cróga"]);
        assert_eq!(
            build_adjective_vector(&ga, "cróga", &units(), 2),
            NounVector::from_ints(&[1, 0])
        );
        assert_eq!(build_adjective_vector(&ga, "olc", &units(), 2), NounVector::zeros(2));
    }
}
