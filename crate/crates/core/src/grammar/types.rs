//! Basic, simple and compound pregroup types.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::GrammarError;

/// Smallest adjoint order accepted (`x^ll`).
pub const MIN_ADJOINT: i8 = -2;
/// Largest adjoint order accepted (`x^rr`).
pub const MAX_ADJOINT: i8 = 2;

/// The four basic types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasicType {
    /// Nouns and noun phrases, `n`.
    Noun,
    /// Declarative sentences, `s`.
    Sentence,
    /// Verb infinitives, `j`. Declared but unused by the shipped lexicons.
    Infinitive,
    /// Gluing type, `sigma`. Declared but unused by the shipped lexicons.
    Gluing,
}

impl BasicType {
    /// All basic types, in tag order.
    pub const ALL: [BasicType; 4] = [
        BasicType::Noun,
        BasicType::Sentence,
        BasicType::Infinitive,
        BasicType::Gluing,
    ];

    /// Tag used in type strings.
    pub fn tag(self) -> &'static str {
        match self {
            BasicType::Noun => "n",
            BasicType::Sentence => "s",
            BasicType::Infinitive => "j",
            BasicType::Gluing => "sigma",
        }
    }
}

impl fmt::Display for BasicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A basic type together with its adjoint order.
///
/// Order `0` is the plain type, negative orders are iterated left adjoints
/// (`-1` = `l`, `-2` = `ll`) and positive orders iterated right adjoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    base: BasicType,
    adjoint: i8,
}

impl SimpleType {
    /// Builds a simple type, rejecting orders outside `[-2, 2]`.
    pub fn new(base: BasicType, adjoint: i8) -> Result<Self, GrammarError> {
        if (MIN_ADJOINT..=MAX_ADJOINT).contains(&adjoint) {
            Ok(SimpleType { base, adjoint })
        } else {
            Err(GrammarError::AdjointOutOfRange {
                base,
                order: adjoint as i32,
            })
        }
    }

    /// The plain (order zero) type.
    pub const fn plain(base: BasicType) -> Self {
        SimpleType { base, adjoint: 0 }
    }

    /// Basic type.
    pub fn base(self) -> BasicType {
        self.base
    }

    /// Adjoint order.
    pub fn adjoint(self) -> i8 {
        self.adjoint
    }

    /// Whether `self · right` cancels, i.e. it is `x^(k) · x^(k+1)`.
    ///
    /// This covers both `x^l · x → 1` and `x · x^r → 1` and their iterates.
    pub fn contracts_with(self, right: SimpleType) -> bool {
        self.base == right.base && self.adjoint + 1 == right.adjoint
    }

    fn shifted(self, by: i8) -> Result<Self, GrammarError> {
        SimpleType::new(self.base, self.adjoint + by)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.base.tag())?;
        let suffix = match self.adjoint {
            0 => "",
            -1 => "^l",
            -2 => "^ll",
            1 => "^r",
            2 => "^rr",
            _ => "^?",
        };
        f.write_str(suffix)
    }
}

impl FromStr for SimpleType {
    type Err = GrammarError;

    /// Parses `n`, `nl`, `n^ll`, `sr`, `sigma^l`, ...
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (base, rest) = if let Some(rest) = s.strip_prefix("sigma") {
            (BasicType::Gluing, rest)
        } else {
            let mut chars = s.chars();
            let base = match chars.next() {
                Some('n') => BasicType::Noun,
                Some('s') => BasicType::Sentence,
                Some('j') => BasicType::Infinitive,
                _ => return Err(GrammarError::TypeSyntax(s.to_string())),
            };
            (base, chars.as_str())
        };
        let rest = rest.strip_prefix('^').unwrap_or(rest);
        let adjoint = match rest {
            "" => 0,
            "l" => -1,
            "ll" => -2,
            "r" => 1,
            "rr" => 2,
            _ => return Err(GrammarError::TypeSyntax(s.to_string())),
        };
        SimpleType::new(base, adjoint)
    }
}

/// Side of an adjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Left adjoint, `t^l`.
    Left,
    /// Right adjoint, `t^r`.
    Right,
}

/// An ordered product of simple types, the grammatical type of a word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PregroupType(Vec<SimpleType>);

impl PregroupType {
    /// Wraps a list of simple types.
    pub fn new(simples: Vec<SimpleType>) -> Self {
        PregroupType(simples)
    }

    /// The sentence type `s`.
    pub fn sentence() -> Self {
        PregroupType(alloc::vec![SimpleType::plain(BasicType::Sentence)])
    }

    /// The simple types in order.
    pub fn simples(&self) -> &[SimpleType] {
        &self.0
    }

    /// Number of simple factors.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether this is the unit type `1`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Juxtaposition `self · other`.
    pub fn concat(&self, other: &PregroupType) -> PregroupType {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PregroupType(v)
    }

    /// Left or right adjoint: reverse the factors and shift every order by
    /// `-1` (left) or `+1` (right).
    pub fn adjoint(&self, side: Side) -> Result<PregroupType, GrammarError> {
        let by = match side {
            Side::Left => -1,
            Side::Right => 1,
        };
        self.0
            .iter()
            .rev()
            .map(|t| t.shifted(by))
            .collect::<Result<Vec<_>, _>>()
            .map(PregroupType)
    }
}

/// Free-function form of [`PregroupType::adjoint`].
pub fn adjoint(t: &PregroupType, side: Side) -> Result<PregroupType, GrammarError> {
    t.adjoint(side)
}

impl fmt::Display for PregroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for PregroupType {
    type Err = GrammarError;

    /// Parses a space-separated list such as `"s nl nl"` or `"n^r n n^ll s^l"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let simples = s
            .split_whitespace()
            .map(SimpleType::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        if simples.is_empty() {
            return Err(GrammarError::EmptyType);
        }
        Ok(PregroupType(simples))
    }
}

impl From<SimpleType> for PregroupType {
    fn from(t: SimpleType) -> Self {
        PregroupType(alloc::vec![t])
    }
}

/// Formats a list of types the way they are written under a sentence.
pub fn display_sequence(types: &[PregroupType]) -> String {
    let mut out = String::new();
    for (i, t) in types.iter().enumerate() {
        if i > 0 {
            out.push_str(" · ");
        }
        out.push_str(&t.to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PregroupType {
        s.parse().unwrap()
    }

    #[test]
    fn parses_compact_and_caret_forms() {
        assert_eq!(t("s nl nl"), t("s n^l n^l"));
        assert_eq!(t("nr n nll sl").to_string(), "n^r n n^ll s^l");
        assert_eq!(t("sigmal").simples()[0].base(), BasicType::Gluing);
        assert!("x".parse::<PregroupType>().is_err());
        assert!("n^lll".parse::<PregroupType>().is_err());
        assert!(matches!("".parse::<PregroupType>(), Err(GrammarError::EmptyType)));
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(t("n").adjoint(Side::Left).unwrap(), t("nl"));
        assert_eq!(t("nl").adjoint(Side::Right).unwrap(), t("n"));
        assert_eq!(t("s nl").adjoint(Side::Left).unwrap(), t("nll sl"));
    }

    #[test]
    fn adjoint_out_of_range_is_an_error() {
        assert!(matches!(
            t("nll").adjoint(Side::Left),
            Err(GrammarError::AdjointOutOfRange { order: -3, .. })
        ));
    }

    #[test]
    fn adjoint_of_product_reverses() {
        let a = t("n sl");
        let b = t("nr s");
        let lhs = a.concat(&b).adjoint(Side::Left).unwrap();
        let rhs = b.adjoint(Side::Left).unwrap().concat(&a.adjoint(Side::Left).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_rule() {
        let n = SimpleType::plain(BasicType::Noun);
        let nl = SimpleType::new(BasicType::Noun, -1).unwrap();
        let nr = SimpleType::new(BasicType::Noun, 1).unwrap();
        assert!(nl.contracts_with(n));
        assert!(n.contracts_with(nr));
        assert!(!nr.contracts_with(n));
        assert!(!n.contracts_with(nl));
    }
}
