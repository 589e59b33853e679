//! Type assignment from the lexicon and whole-sentence parsing.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::lexicon::{Category, Lexicon, LexiconEntry};
use super::reduce::{reduce, ReductionPlan};
use super::types::PregroupType;
use super::GrammarError;
use crate::Language;

/// A token paired with the lexicon entry chosen for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedToken {
    /// Token text as it appeared in the input.
    pub surface: String,
    /// The lexicon entry supplying type and meaning key.
    pub entry: LexiconEntry,
}

impl TypedToken {
    /// The token's pregroup type.
    pub fn ptype(&self) -> &PregroupType {
        &self.entry.ptype
    }
}

/// A typed sentence together with its reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parse {
    /// Typed tokens in sentence order.
    pub tokens: Vec<TypedToken>,
    /// Reduction of the token types to `s`.
    pub plan: ReductionPlan,
}

fn candidates<'a>(
    token: &'a str,
    language: Language,
    lexicon: &'a Lexicon,
) -> Result<Vec<&'a LexiconEntry>, GrammarError> {
    let found: Vec<&LexiconEntry> = lexicon.lookup(token, language).collect();
    if found.is_empty() {
        Err(GrammarError::UnknownToken {
            token: token.to_string(),
            language,
        })
    } else {
        Ok(found)
    }
}

/// Assigns one lexicon entry to every token.
///
/// Tokens with several entries of different categories are rejected as
/// ambiguous; use [`assign_types_with_hints`] or [`parse`] for those.
pub fn assign_types<S: AsRef<str>>(
    tokens: &[S],
    language: Language,
    lexicon: &Lexicon,
) -> Result<Vec<TypedToken>, GrammarError> {
    let hints: Vec<Option<Category>> = alloc::vec![None; tokens.len()];
    assign_types_with_hints(tokens, &hints, language, lexicon)
}

/// Like [`assign_types`], with an optional category per token that selects
/// among ambiguous entries.
pub fn assign_types_with_hints<S: AsRef<str>>(
    tokens: &[S],
    hints: &[Option<Category>],
    language: Language,
    lexicon: &Lexicon,
) -> Result<Vec<TypedToken>, GrammarError> {
    tokens
        .iter()
        .enumerate()
        .map(|(i, tok)| {
            let tok = tok.as_ref();
            let mut found = candidates(tok, language, lexicon)?;
            if let Some(Some(hint)) = hints.get(i) {
                found.retain(|e| e.category == *hint);
                if found.is_empty() {
                    return Err(GrammarError::UnknownToken {
                        token: tok.to_string(),
                        language,
                    });
                }
            }
            let first = found[0];
            if found.iter().any(|e| e.category != first.category) {
                let names: Vec<&str> = found.iter().map(|e| e.category.name()).collect();
                return Err(GrammarError::Ambiguous {
                    token: tok.to_string(),
                    candidates: names.join(", "),
                });
            }
            Ok(TypedToken {
                surface: tok.to_string(),
                entry: first.clone(),
            })
        })
        .collect()
}

/// Types and reduces a sentence, trying the lexicon's alternatives for
/// ambiguous tokens in file order and returning the first assignment that
/// reduces to `s`.
///
/// When no assignment reduces, the error of the first assignment is
/// returned.
pub fn parse<S: AsRef<str>>(tokens: &[S], language: Language, lexicon: &Lexicon) -> Result<Parse, GrammarError> {
    if tokens.is_empty() {
        return Err(GrammarError::EmptyInput);
    }
    let options: Vec<Vec<&LexiconEntry>> = tokens
        .iter()
        .map(|t| candidates(t.as_ref(), language, lexicon))
        .collect::<Result<_, _>>()?;
    let mut choice = alloc::vec![0usize; tokens.len()];
    let mut first_error = None;
    loop {
        let typed: Vec<TypedToken> = tokens
            .iter()
            .zip(&options)
            .zip(&choice)
            .map(|((t, opts), &c)| TypedToken {
                surface: t.as_ref().to_string(),
                entry: opts[c].clone(),
            })
            .collect();
        match reduce_typed(&typed) {
            Ok(plan) => return Ok(Parse { tokens: typed, plan }),
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
        // Odometer over the candidate lists, last token fastest.
        let mut i = tokens.len();
        loop {
            if i == 0 {
                return Err(first_error.unwrap_or(GrammarError::EmptyInput));
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Reduces already-typed tokens and annotates relative pronouns.
pub fn reduce_typed(tokens: &[TypedToken]) -> Result<ReductionPlan, GrammarError> {
    let types: Vec<PregroupType> = tokens.iter().map(|t| t.entry.ptype.clone()).collect();
    let mut plan = reduce(&types)?;
    let categories: Vec<Category> = tokens.iter().map(|t| t.entry.category).collect();
    plan.annotate_relative_pronouns(&categories);
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn irish() -> Lexicon {
        use Category::*;
        let l = Language::Irish;
        Lexicon::new(vec![
            LexiconEntry::new("Bhris", l, TransitiveVerb).with_lemma("bris"),
            LexiconEntry::new("mé", l, Noun),
            LexiconEntry::new("vása", l, Noun),
            LexiconEntry::new("faoin droichead", l, PrepositionPhrase).with_object("droichead"),
            LexiconEntry::new("mór", l, Adjective),
            LexiconEntry::new("inné", l, Adverb),
            LexiconEntry::new("Is", l, Copula).with_lemma("is"),
            LexiconEntry::new("Impire", l, Noun),
            LexiconEntry::new("olc", l, Adjective),
            LexiconEntry::new("olc", l, Noun),
            LexiconEntry::new("Palpatine", l, Noun),
        ])
        .unwrap()
    }

    fn types(tokens: &[TypedToken]) -> Vec<String> {
        tokens.iter().map(|t| t.ptype().to_string()).collect()
    }

    #[test]
    fn irish_example_sentence_types() {
        let lex = irish();
        let toks = ["Bhris", "mé", "vása", "faoin droichead", "mór", "inné"];
        let hints = [None, None, None, None, None, None];
        let typed = assign_types_with_hints(&toks, &hints, Language::Irish, &lex).unwrap();
        assert_eq!(types(&typed), ["s n^l n^l", "n", "n", "n^r n", "n^r n", "s^r s"]);
        assert!(reduce_typed(&typed).is_ok());
    }

    #[test]
    fn unknown_and_ambiguous_tokens() {
        let lex = irish();
        assert!(matches!(
            assign_types(&["Anakin"], Language::Irish, &lex),
            Err(GrammarError::UnknownToken { .. })
        ));
        assert!(matches!(
            assign_types(&["Is", "Impire", "olc", "Palpatine"], Language::Irish, &lex),
            Err(GrammarError::Ambiguous { .. })
        ));
        let hints = [None, None, Some(Category::Adjective), None];
        let typed =
            assign_types_with_hints(&["Is", "Impire", "olc", "Palpatine"], &hints, Language::Irish, &lex).unwrap();
        assert_eq!(types(&typed), ["s n^l n^l", "n", "n^r n", "n"]);
    }

    #[test]
    fn parse_resolves_ambiguity_by_reduction() {
        let lex = irish();
        let p = parse(&["Is", "Impire", "olc", "Palpatine"], Language::Irish, &lex).unwrap();
        assert_eq!(p.tokens[2].entry.category, Category::Adjective);
        assert_eq!(p.plan.pairings().len(), 3);
    }
}
