//! Bilingual lexicon: surface forms, categories, types and argument roles.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::types::{BasicType, PregroupType};
use super::GrammarError;
use crate::Language;

/// Grammatical category of a lexicon entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    /// Noun or proper name, `n`.
    Noun,
    /// Transitive verb.
    TransitiveVerb,
    /// Copula used transitively ("is a mastermind").
    Copula,
    /// Attributive adjective.
    Adjective,
    /// Sentence adverb, `s^r s`.
    Adverb,
    /// Preposition phrase modifying a noun, `n^r n`.
    PrepositionPhrase,
    /// Relative pronoun whose head fills the subject slot.
    RelativePronounSubject,
    /// Relative pronoun whose head fills the object slot.
    RelativePronounObject,
}

impl Category {
    /// All categories.
    pub const ALL: [Category; 8] = [
        Category::Noun,
        Category::TransitiveVerb,
        Category::Copula,
        Category::Adjective,
        Category::Adverb,
        Category::PrepositionPhrase,
        Category::RelativePronounSubject,
        Category::RelativePronounObject,
    ];

    /// Name used in lexicon files.
    pub fn name(self) -> &'static str {
        match self {
            Category::Noun => "noun",
            Category::TransitiveVerb => "transitive-verb",
            Category::Copula => "copula",
            Category::Adjective => "adjective",
            Category::Adverb => "adverb",
            Category::PrepositionPhrase => "preposition-phrase",
            Category::RelativePronounSubject => "relative-pronoun-subject",
            Category::RelativePronounObject => "relative-pronoun-object",
        }
    }

    /// The type a word of this category must carry in `language`.
    pub fn canonical_type(self, language: Language) -> PregroupType {
        let s = match (self, language) {
            (Category::Noun, _) => "n",
            (Category::TransitiveVerb | Category::Copula, Language::English) => "nr s nl",
            (Category::TransitiveVerb | Category::Copula, Language::Irish) => "s nl nl",
            (Category::Adjective, Language::English) => "n nl",
            (Category::Adjective, Language::Irish) => "nr n",
            (Category::Adverb, _) => "sr s",
            (Category::PrepositionPhrase, _) => "nr n",
            (Category::RelativePronounSubject, Language::English) => "nr n sl n",
            (Category::RelativePronounSubject, Language::Irish) => "nr n nll sl",
            (Category::RelativePronounObject, _) => "nr n nll sl",
        };
        s.parse().expect("canonical types are well formed")
    }

    /// Whether this category takes subject/object arguments.
    pub fn is_verbal(self) -> bool {
        matches!(self, Category::TransitiveVerb | Category::Copula)
    }

    /// Whether this category introduces a relative clause.
    pub fn is_relative_pronoun(self) -> bool {
        matches!(self, Category::RelativePronounSubject | Category::RelativePronounObject)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Category {
    type Err = GrammarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        Category::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .or(match s {
                "verb" => Some(Category::TransitiveVerb),
                "preposition-phrase-head" | "pp" => Some(Category::PrepositionPhrase),
                _ => None,
            })
            .ok_or_else(|| GrammarError::UnknownCategory(s.into()))
    }
}

/// Grammatical role of a verb argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    /// Subject.
    Subject,
    /// Object.
    Object,
}

/// Surface order of a verb and its two arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArgumentOrder {
    /// English transitive verbs and copula.
    SubjectVerbObject,
    /// Irish transitive verbs.
    VerbSubjectObject,
    /// Irish copula.
    VerbObjectSubject,
}

impl ArgumentOrder {
    /// Default order for a verbal category in `language`.
    pub fn default_for(category: Category, language: Language) -> Option<ArgumentOrder> {
        match (category, language) {
            (c, Language::English) if c.is_verbal() => Some(ArgumentOrder::SubjectVerbObject),
            (Category::TransitiveVerb, Language::Irish) => Some(ArgumentOrder::VerbSubjectObject),
            (Category::Copula, Language::Irish) => Some(ArgumentOrder::VerbObjectSubject),
            _ => None,
        }
    }

    /// Name used in lexicon files.
    pub fn name(self) -> &'static str {
        match self {
            ArgumentOrder::SubjectVerbObject => "svo",
            ArgumentOrder::VerbSubjectObject => "vso",
            ArgumentOrder::VerbObjectSubject => "vos",
        }
    }

    /// Roles of the noun-adjoint wires of `ptype`, one slot per simple type.
    ///
    /// For a verb-initial type `s n^l n^l` the argument closest to the verb
    /// is cancelled by the inner (last) `n^l`, so under VSO the inner wire
    /// is the subject and the outer wire the object.
    pub fn roles(self, ptype: &PregroupType) -> Vec<Option<Role>> {
        let simples = ptype.simples();
        let mut roles: Vec<Option<Role>> = alloc::vec![None; simples.len()];
        let args: Vec<usize> = simples
            .iter()
            .enumerate()
            .filter(|(_, t)| t.base() == BasicType::Noun && t.adjoint() != 0)
            .map(|(i, _)| i)
            .collect();
        match self {
            ArgumentOrder::SubjectVerbObject => {
                for &i in &args {
                    roles[i] = Some(if simples[i].adjoint() > 0 {
                        Role::Subject
                    } else {
                        Role::Object
                    });
                }
            }
            ArgumentOrder::VerbSubjectObject | ArgumentOrder::VerbObjectSubject => {
                if let [outer, inner] = args[..] {
                    let (o, i) = if self == ArgumentOrder::VerbSubjectObject {
                        (Role::Object, Role::Subject)
                    } else {
                        (Role::Subject, Role::Object)
                    };
                    roles[outer] = Some(o);
                    roles[inner] = Some(i);
                }
            }
        }
        roles
    }
}

impl FromStr for ArgumentOrder {
    type Err = GrammarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "svo" | "subject-verb-object" => Ok(ArgumentOrder::SubjectVerbObject),
            "vso" | "verb-subject-object" => Ok(ArgumentOrder::VerbSubjectObject),
            "vos" | "verb-object-subject" => Ok(ArgumentOrder::VerbObjectSubject),
            other => Err(GrammarError::UnknownArgumentOrder(other.into())),
        }
    }
}

/// One word or phrase with its grammatical description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    /// Surface form, possibly several words.
    pub surface: String,
    /// Language of the surface form.
    pub language: Language,
    /// Grammatical category.
    pub category: Category,
    /// Pregroup type.
    pub ptype: PregroupType,
    /// Argument order for verbal categories.
    pub argument_order: Option<ArgumentOrder>,
    /// Key under which the word's meaning is stored in a model, if it
    /// differs from the surface ("turns" → "turn").
    pub lemma: Option<String>,
    /// Prepositional object of a preposition phrase ("to the dark side of
    /// the Force" → "dark side of the Force").
    pub object: Option<String>,
}

impl LexiconEntry {
    /// Builds an entry with the canonical type and argument order.
    pub fn new(surface: impl Into<String>, language: Language, category: Category) -> Self {
        LexiconEntry {
            surface: surface.into(),
            language,
            category,
            ptype: category.canonical_type(language),
            argument_order: ArgumentOrder::default_for(category, language),
            lemma: None,
            object: None,
        }
    }

    /// Sets the model key.
    pub fn with_lemma(mut self, lemma: impl Into<String>) -> Self {
        self.lemma = Some(lemma.into());
        self
    }

    /// Sets the prepositional object.
    pub fn with_object(mut self, object: impl Into<String>) -> Self {
        self.object = Some(object.into());
        self
    }

    /// Model key: the lemma if set, else the surface.
    pub fn key(&self) -> &str {
        self.lemma.as_deref().unwrap_or(&self.surface)
    }

    /// Per-wire argument roles (all `None` for non-verbal entries).
    pub fn roles(&self) -> Vec<Option<Role>> {
        match self.argument_order {
            Some(order) if self.category.is_verbal() => order.roles(&self.ptype),
            _ => alloc::vec![None; self.ptype.len()],
        }
    }

    /// Checks the entry against the category/type rules.
    pub fn validate(&self) -> Result<(), GrammarError> {
        let invalid = |reason: &str| GrammarError::InvalidEntry {
            surface: self.surface.clone(),
            reason: reason.into(),
        };
        if self.surface.trim().is_empty() {
            return Err(invalid("empty surface form"));
        }
        if self.ptype.is_empty() {
            return Err(invalid("empty type"));
        }
        if self.ptype != self.category.canonical_type(self.language) {
            return Err(invalid("type does not match its category"));
        }
        if self.category.is_verbal() && self.argument_order.is_none() {
            return Err(invalid("verbal entry without argument order"));
        }
        if self.category == Category::PrepositionPhrase && self.object.is_none() {
            return Err(invalid("preposition phrase without an object"));
        }
        Ok(())
    }
}

/// Collection of lexicon entries for one or more languages.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
}

impl Lexicon {
    /// Builds a lexicon, validating every entry.
    pub fn new(entries: Vec<LexiconEntry>) -> Result<Self, GrammarError> {
        for e in &entries {
            e.validate()?;
        }
        Ok(Lexicon { entries })
    }

    /// All entries in file order.
    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    /// Adds an entry after validating it.
    pub fn push(&mut self, entry: LexiconEntry) -> Result<(), GrammarError> {
        entry.validate()?;
        self.entries.push(entry);
        Ok(())
    }

    /// Entries whose surface matches `token` (case-insensitively), in file
    /// order.
    pub fn lookup<'a>(&'a self, token: &'a str, language: Language) -> impl Iterator<Item = &'a LexiconEntry> + 'a {
        self.entries
            .iter()
            .filter(move |e| e.language == language && eq_ignore_case(&e.surface, token))
    }

    /// Multiword surfaces for `language`, used to drive token merging.
    pub fn multiword_surfaces(&self, language: Language) -> impl Iterator<Item = &str> {
        self.entries
            .iter()
            .filter(move |e| e.language == language && e.surface.contains(' '))
            .map(|e| e.surface.as_str())
    }
}

/// Unicode-aware case-insensitive comparison.
pub(crate) fn eq_ignore_case(a: &str, b: &str) -> bool {
    a.chars()
        .flat_map(char::to_lowercase)
        .eq(b.chars().flat_map(char::to_lowercase))
}
