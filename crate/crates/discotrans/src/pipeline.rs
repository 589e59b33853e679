//! Sentence and corpus pipelines over loaded fixtures.
//!
//! A sentence is split into words, multiword names and phrases (including
//! every multiword lexicon surface) are merged, function words are attached
//! to the following word, and the remaining units are typed, reduced and
//! evaluated. Grammar input is not lemmatised: the lexicon lists inflected
//! forms and points them at model keys itself.

use discotrans_core::corpus::{
    attach_function_words, segment_and_tokenize, split_words, window_counts, CorpusDoc, ModifierSide, MultiwordTable,
    Unit,
};
use discotrans_core::distrib::{
    build_adjective_vector, build_modifier_vector, build_verb_matrix, compare, evaluate, noun_vectors, DistribModel,
    Orientation, SentenceMeaning, Similarity,
};
use discotrans_core::grammar::{parse, Category, Parse};

use crate::error::Result;
use crate::fixtures::LanguageData;

/// Window radius used when counting a corpus.
pub const WINDOW_RADIUS: usize = 3;

/// Merge table for grammar input: the text multiwords plus the lexicon's
/// multiword surfaces.
pub fn grammar_multiwords(data: &LanguageData) -> MultiwordTable {
    let mut table = data.text.preprocessing.multiwords.clone();
    table.extend_from_lexicon(&data.lexicon, data.language);
    table
}

/// Splits `sentence` into typed units.
pub fn units(sentence: &str, data: &LanguageData) -> Vec<Unit> {
    let merged = grammar_multiwords(data).merge(&split_words(sentence));
    attach_function_words(&merged, &data.text.function_words)
}

/// A sentence accepted by the grammar.
#[derive(Debug, Clone)]
pub struct CheckedSentence {
    /// Units with their attached particles.
    pub units: Vec<Unit>,
    /// Types and reduction.
    pub parse: Parse,
}

/// Types and reduces `sentence`.
pub fn check_sentence(sentence: &str, data: &LanguageData) -> Result<CheckedSentence> {
    let units = units(sentence, data);
    let texts: Vec<&str> = units.iter().map(|u| u.text.as_str()).collect();
    let parse = parse(&texts, data.language, &data.lexicon)?;
    Ok(CheckedSentence { units, parse })
}

/// A sentence with its meaning.
#[derive(Debug, Clone)]
pub struct EvaluatedSentence {
    /// The accepted parse.
    pub checked: CheckedSentence,
    /// Its meaning in `N ⊗ N`.
    pub meaning: SentenceMeaning,
}

/// Parses and evaluates `sentence` in `model`.
pub fn evaluate_sentence_in(sentence: &str, data: &LanguageData, model: &DistribModel) -> Result<EvaluatedSentence> {
    let checked = check_sentence(sentence, data)?;
    let meaning = evaluate(&checked.parse.plan, &checked.parse.tokens, model)?;
    Ok(EvaluatedSentence { checked, meaning })
}

/// Parses and evaluates `sentence` in the language's own model.
pub fn evaluate_sentence(sentence: &str, data: &LanguageData) -> Result<EvaluatedSentence> {
    evaluate_sentence_in(sentence, data, &data.model)
}

/// Meanings of two sentences and their similarity.
#[derive(Debug, Clone)]
pub struct Comparison {
    /// First sentence.
    pub left: EvaluatedSentence,
    /// Second sentence.
    pub right: EvaluatedSentence,
    /// Inner product, lengths and cosine.
    pub similarity: Similarity,
}

/// Evaluates and compares two sentences.
pub fn compare_sentences(a: &str, a_data: &LanguageData, b: &str, b_data: &LanguageData) -> Result<Comparison> {
    let left = evaluate_sentence(a, a_data)?;
    let right = evaluate_sentence(b, b_data)?;
    let similarity = compare(&left.meaning, &right.meaning);
    Ok(Comparison {
        left,
        right,
        similarity,
    })
}

/// Tokenises a corpus with the language's preprocessing tables.
pub fn tokenize_corpus(text: &str, data: &LanguageData) -> CorpusDoc {
    let mut tables = data.text.preprocessing.clone();
    tables.multiwords = grammar_multiwords(data);
    segment_and_tokenize(text, data.language, &tables)
}

/// Builds a model from a corpus over `basis`.
///
/// Nouns, verbs, adjectives and preposition phrases are those of the
/// lexicon, keyed as the lexicon keys them. Verb matrices take their
/// argument order from the lexicon and keep the orientation of the
/// language's fixture model (subject-object when it has none). Preposition
/// phrases sum the nouns they follow.
pub fn build_model(doc: &CorpusDoc, data: &LanguageData, basis: Vec<String>, radius: usize) -> Result<DistribModel> {
    let table = window_counts(doc, &basis, radius)?;
    let dim = basis.len();
    let mut model = DistribModel::new(data.language, basis);
    let keys = |cat: &dyn Fn(Category) -> bool| {
        let mut out: Vec<&discotrans_core::grammar::LexiconEntry> = Vec::new();
        for e in data.lexicon.entries().iter().filter(|e| cat(e.category)) {
            if !out.iter().any(|o| o.key() == e.key()) {
                out.push(e);
            }
        }
        out
    };
    let noun_keys: Vec<&str> = keys(&|c| c == Category::Noun).iter().map(|e| e.key()).collect();
    model.nouns = noun_vectors(&table, &noun_keys);
    for e in keys(&|c| c.is_verbal()) {
        let orientation = data
            .model
            .verbs
            .get(e.key())
            .map_or(Orientation::SubjectObject, |m| m.orientation());
        let order = e
            .argument_order
            .unwrap_or(discotrans_core::grammar::ArgumentOrder::SubjectVerbObject);
        model.verbs.insert(
            e.key(),
            build_verb_matrix(doc, e.key(), &model.nouns, order, orientation, dim),
        );
    }
    for e in keys(&|c| c == Category::Adjective) {
        model
            .adjectives
            .insert(e.key(), build_adjective_vector(doc, e.key(), &model.nouns, dim));
    }
    for e in keys(&|c| c == Category::PrepositionPhrase) {
        let v = build_modifier_vector(doc, e.key(), &model.nouns, ModifierSide::Previous, dim);
        model.pp_heads.insert(e.key(), v);
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixtures;

    #[test]
    fn particles_attach_and_phrases_merge() {
        let f = Fixtures::bundled().unwrap();
        let u = units(
            "Palpatine is the mastermind who turns Anakin to the dark side of the Force",
            &f.english,
        );
        let shown: Vec<String> = u.iter().map(Unit::display).collect();
        assert_eq!(shown.last().unwrap(), "to the dark side of the Force");
        assert_eq!(u[2].particles, ["the"]);
        let u = units("Is Impire olc é Palpatine", &f.irish);
        assert_eq!(u.len(), 4);
        assert_eq!(u[3].display(), "é Palpatine");
    }

    #[test]
    fn scrambled_sentences_are_rejected() {
        let f = Fixtures::bundled().unwrap();
        assert!(check_sentence("Palpatine is an evil Emperor", &f.english).is_ok());
        assert!(check_sentence("is Palpatine an evil Emperor", &f.english).is_err());
        assert!(check_sentence("Palpatine Emperor evil is", &f.english).is_err());
    }

    #[test]
    fn corpus_models_cover_the_lexicon() {
        let f = Fixtures::bundled().unwrap();
        let text = f.source.corpus("star_wars", f.english.language).unwrap();
        let doc = tokenize_corpus(&text, &f.english);
        let model = build_model(&doc, &f.english, f.english.model.basis.clone(), WINDOW_RADIUS).unwrap();
        assert!(model.verbs.contains("turn"));
        assert!(model.nouns.contains("Anakin"));
        assert!(model.validate().is_ok());
    }
}
