//! Sentence splitting, tokenisation and table-driven normalisation.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::grammar::Lexicon;
use crate::Language;

/// Lowercases a word for table lookups.
pub fn fold(word: &str) -> String {
    word.chars().flat_map(char::to_lowercase).collect()
}

/// Kind of a multiword expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MultiwordKind {
    /// A person's name ("Mace Windu").
    Name,
    /// Any other fixed phrase ("dark side of the Force").
    Phrase,
}

/// One multiword expression and the token it collapses to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiword {
    /// Kind of expression.
    pub kind: MultiwordKind,
    /// Words of the phrase as written.
    pub words: Vec<String>,
    /// Token emitted for the phrase.
    pub canonical: String,
}

impl Multiword {
    /// A phrase that collapses to its own spelling.
    pub fn new(kind: MultiwordKind, phrase: &str) -> Self {
        Multiword::with_canonical(kind, phrase, phrase)
    }

    /// A phrase that collapses to `canonical` ("Obi Wan" → "Obi-Wan").
    pub fn with_canonical(kind: MultiwordKind, phrase: &str, canonical: &str) -> Self {
        Multiword {
            kind,
            words: phrase.split_whitespace().map(ToString::to_string).collect(),
            canonical: canonical.to_string(),
        }
    }
}

/// Multiword expressions, matched longest first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MultiwordTable {
    entries: Vec<Multiword>,
}

impl MultiwordTable {
    /// Builds a table.
    pub fn new(entries: Vec<Multiword>) -> Self {
        MultiwordTable { entries }
    }

    /// The entries in insertion order.
    pub fn entries(&self) -> &[Multiword] {
        &self.entries
    }

    /// Adds an entry.
    pub fn push(&mut self, entry: Multiword) {
        self.entries.push(entry);
    }

    /// Adds every multiword surface of `lexicon` for `language` as a phrase
    /// that collapses to itself, unless already present.
    pub fn extend_from_lexicon(&mut self, lexicon: &Lexicon, language: Language) {
        for surface in lexicon.multiword_surfaces(language) {
            let folded = fold(surface);
            let known = self.entries.iter().any(|e| fold(&e.words.join(" ")) == folded);
            if !known {
                self.entries.push(Multiword::new(MultiwordKind::Phrase, surface));
            }
        }
    }

    /// Keeps only the entries of one kind.
    pub fn only(&self, kind: MultiwordKind) -> MultiwordTable {
        MultiwordTable {
            entries: self.entries.iter().filter(|e| e.kind == kind).cloned().collect(),
        }
    }

    /// Collapses every occurrence of a multiword expression into one token.
    ///
    /// At each position the longest matching phrase wins; matching ignores
    /// case.
    pub fn merge(&self, tokens: &[String]) -> Vec<String> {
        let folded: Vec<String> = tokens.iter().map(|t| fold(t)).collect();
        let mut out = Vec::with_capacity(tokens.len());
        let mut i = 0;
        while i < tokens.len() {
            let best = self
                .entries
                .iter()
                .filter(|e| {
                    let n = e.words.len();
                    n > 0 && i + n <= tokens.len() && e.words.iter().zip(&folded[i..i + n]).all(|(w, t)| fold(w) == *t)
                })
                .max_by_key(|e| e.words.len());
            match best {
                Some(e) => {
                    out.push(e.canonical.clone());
                    i += e.words.len();
                }
                None => {
                    out.push(tokens[i].clone());
                    i += 1;
                }
            }
        }
        out
    }
}

/// Maps inflected forms to their heads ("turns" → "turn").
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaTable {
    map: BTreeMap<String, String>,
}

impl LemmaTable {
    /// Builds a table from `(form, lemma)` pairs.
    pub fn new<I, A, B>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: Into<String>,
    {
        LemmaTable {
            map: pairs.into_iter().map(|(f, l)| (fold(f.as_ref()), l.into())).collect(),
        }
    }

    /// The lemma of `word`, or `word` itself.
    pub fn lemma<'a>(&'a self, word: &'a str) -> &'a str {
        self.map.get(&fold(word)).map(String::as_str).unwrap_or(word)
    }

    /// Number of mappings.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    /// Whether the table is empty.
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Literal text rewrites applied before tokenisation, used to spell out
/// pronoun references and conjunctions ("she is pregnant" → "Padmé is
/// pregnant").
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SubstitutionTable {
    rules: Vec<(String, String)>,
}

impl SubstitutionTable {
    /// Builds a table from `(from, to)` pairs, applied in order.
    pub fn new(rules: Vec<(String, String)>) -> Self {
        SubstitutionTable { rules }
    }

    /// The rules in order.
    pub fn rules(&self) -> &[(String, String)] {
        &self.rules
    }

    /// Applies every rule to `text`.
    pub fn apply(&self, text: &str) -> String {
        let mut out = text.to_string();
        for (from, to) in &self.rules {
            if !from.is_empty() {
                out = out.replace(from.as_str(), to);
            }
        }
        out
    }
}

/// All tables consulted while ingesting a corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Preprocessing {
    /// Multiword expressions.
    pub multiwords: MultiwordTable,
    /// Lemma mappings.
    pub lemmas: LemmaTable,
    /// Text rewrites.
    pub substitutions: SubstitutionTable,
}

/// A tokenised corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusDoc {
    /// Language of the text.
    pub language: Language,
    /// Sentences as token lists (merged and lemmatised).
    pub sentences: Vec<Vec<String>>,
}

impl CorpusDoc {
    /// Concatenation of two documents in the same language.
    pub fn concat(&self, other: &CorpusDoc) -> CorpusDoc {
        let mut sentences = self.sentences.clone();
        sentences.extend(other.sentences.iter().cloned());
        CorpusDoc {
            language: self.language,
            sentences,
        }
    }
}

const SENTENCE_END: [char; 3] = ['.', '!', '?'];

fn is_edge_punctuation(c: char) -> bool {
    !(c.is_alphanumeric() || c == '-')
}

/// Splits text into sentences on `.`, `!` and `?`.
pub fn split_sentences(text: &str) -> Vec<&str> {
    text.split(SENTENCE_END)
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

/// Splits a sentence into words, trimming punctuation at word edges.
///
/// Hyphens and inner apostrophes are kept ("Obi-Wan", "an-te", "Earth's").
pub fn split_words(sentence: &str) -> Vec<String> {
    sentence
        .split(|c: char| c.is_whitespace() || matches!(c, ',' | ';' | ':' | '(' | ')' | '"'))
        .map(|w| w.trim_matches(is_edge_punctuation))
        .filter(|w| !w.is_empty())
        .map(ToString::to_string)
        .collect()
}

/// Tokenises a single sentence: split, merge multiwords, lemmatise.
pub fn tokenize_sentence(sentence: &str, tables: &Preprocessing) -> Vec<String> {
    let words = split_words(&tables.substitutions.apply(sentence));
    tables
        .multiwords
        .merge(&words)
        .into_iter()
        .map(|t| tables.lemmas.lemma(&t).to_string())
        .collect()
}

/// Splits `text` into sentences and tokenises each.
pub fn segment_and_tokenize(text: &str, language: Language, tables: &Preprocessing) -> CorpusDoc {
    let text = tables.substitutions.apply(text);
    let sentences = split_sentences(&text)
        .into_iter()
        .map(|s| {
            let words = split_words(s);
            tables
                .multiwords
                .merge(&words)
                .into_iter()
                .map(|t| tables.lemmas.lemma(&t).to_string())
                .collect::<Vec<_>>()
        })
        .filter(|s| !s.is_empty())
        .collect();
    CorpusDoc { language, sentences }
}

/// A content word with the untyped function words that precede it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    /// Function words attached to this unit ("an", "é", "to").
    pub particles: Vec<String>,
    /// The content word that receives a type.
    pub text: String,
}

impl Unit {
    /// The unit as written, particles first.
    pub fn display(&self) -> String {
        let mut s = String::new();
        for p in &self.particles {
            s.push_str(p);
            s.push(' ');
        }
        s.push_str(&self.text);
        s
    }
}

/// Attaches every function word to the next content word.
///
/// Trailing function words with nothing to attach to are kept as units of
/// their own so that the grammar reports them.
pub fn attach_function_words<S: AsRef<str>>(tokens: &[String], function_words: &[S]) -> Vec<Unit> {
    let is_function = |t: &str| function_words.iter().any(|f| fold(f.as_ref()) == fold(t));
    let mut units = Vec::new();
    let mut pending = Vec::new();
    for t in tokens {
        if is_function(t) {
            pending.push(t.clone());
        } else {
            units.push(Unit {
                particles: core::mem::take(&mut pending),
                text: t.clone(),
            });
        }
    }
    units.extend(pending.into_iter().map(|p| Unit {
        particles: Vec::new(),
        text: p,
    }));
    units
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn tables() -> Preprocessing {
        Preprocessing {
            multiwords: MultiwordTable::new(vec![
                Multiword::new(MultiwordKind::Phrase, "dark side of the Force"),
                Multiword::new(MultiwordKind::Phrase, "to the dark side of the Force"),
                Multiword::with_canonical(MultiwordKind::Name, "Obi Wan", "Obi-Wan"),
            ]),
            lemmas: LemmaTable::new([("turns", "turn")]),
            substitutions: SubstitutionTable::new(vec![("she is pregnant".into(), "Padmé is pregnant".into())]),
        }
    }

    #[test]
    fn single_sentence() {
        let doc = segment_and_tokenize("Palpatine is an evil Emperor.", Language::English, &tables());
        assert_eq!(doc.sentences, [["Palpatine", "is", "an", "evil", "Emperor"]]);
    }

    #[test]
    fn longest_multiword_wins_and_lemmas_apply() {
        let doc = segment_and_tokenize(
            "Palpatine turns Anakin to the dark side of the Force! Obi Wan fights the dark side of the Force?",
            Language::English,
            &tables(),
        );
        assert_eq!(doc.sentences.len(), 2);
        assert_eq!(
            doc.sentences[0],
            ["Palpatine", "turn", "Anakin", "to the dark side of the Force"]
        );
        assert_eq!(doc.sentences[1], ["Obi-Wan", "fights", "the", "dark side of the Force"]);
    }

    #[test]
    fn substitutions_and_punctuation() {
        let doc = segment_and_tokenize("Later, she is pregnant.", Language::English, &tables());
        assert_eq!(doc.sentences, [["Later", "Padmé", "is", "pregnant"]]);
        assert_eq!(
            split_words("Earth's sister, \"an-te\" (Véineas)"),
            ["Earth's", "sister", "an-te", "Véineas"]
        );
    }

    #[test]
    fn function_words_attach_forward() {
        let toks: Vec<String> = ["Is", "Impire", "olc", "é", "Palpatine"].map(String::from).to_vec();
        let units = attach_function_words(&toks, &["é", "an"]);
        assert_eq!(units.len(), 4);
        assert_eq!(units[3].display(), "é Palpatine");
        assert_eq!(units[3].text, "Palpatine");
    }
}
