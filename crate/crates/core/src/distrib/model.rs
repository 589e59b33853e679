//! Word vectors, verb matrices and the per-language model.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use super::DistribError;
use crate::corpus::fold;
use crate::numeric::Rational;
use crate::Language;

/// A non-negative vector over the noun basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NounVector(Vec<Rational>);

impl NounVector {
    /// Wraps coordinates, rejecting negative entries.
    pub fn new(coords: Vec<Rational>) -> Result<Self, DistribError> {
        if coords.iter().any(Signed::is_negative) {
            return Err(DistribError::NegativeEntry);
        }
        Ok(NounVector(coords))
    }

    /// Builds a vector from integer coordinates.
    pub fn from_ints(coords: &[u64]) -> Self {
        NounVector(coords.iter().map(|&c| Rational::from_integer(c as i64)).collect())
    }

    /// The all-zero vector of dimension `dim`.
    pub fn zeros(dim: usize) -> Self {
        NounVector(alloc::vec![Rational::zero(); dim])
    }

    /// Unit vector `e_index`.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = NounVector::zeros(dim);
        v.0[index] = Rational::from_integer(1);
        v
    }

    /// Coordinates.
    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// Number of coordinates.
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Pointwise product.
    pub fn hadamard(&self, other: &NounVector) -> Result<NounVector, DistribError> {
        check_dims(self.dim(), other.dim())?;
        Ok(NounVector(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect()))
    }

    /// Coordinate-wise sum.
    pub fn add(&self, other: &NounVector) -> Result<NounVector, DistribError> {
        check_dims(self.dim(), other.dim())?;
        Ok(NounVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// Multiplies every coordinate by `factor` (must be non-negative).
    pub fn scaled(&self, factor: Rational) -> Result<NounVector, DistribError> {
        NounVector::new(self.0.iter().map(|c| c * factor).collect())
    }
}

impl fmt::Display for NounVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

pub(crate) fn check_dims(a: usize, b: usize) -> Result<(), DistribError> {
    if a == b {
        Ok(())
    } else {
        Err(DistribError::DimensionMismatch { left: a, right: b })
    }
}

/// Which argument indexes the rows of a stored verb matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Rows are subjects, columns objects.
    SubjectObject,
    /// Rows are objects, columns subjects (Irish transitive verbs).
    ObjectSubject,
}

impl Orientation {
    /// Name used in model files.
    pub fn name(self) -> &'static str {
        match self {
            Orientation::SubjectObject => "subject-object",
            Orientation::ObjectSubject => "object-subject",
        }
    }
}

impl core::str::FromStr for Orientation {
    type Err = DistribError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "subject-object" => Ok(Orientation::SubjectObject),
            "object-subject" => Ok(Orientation::ObjectSubject),
            other => Err(DistribError::UnknownOrientation(other.to_string())),
        }
    }
}

/// A square non-negative matrix relating subjects and objects.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VerbMatrix {
    rows: Vec<Vec<Rational>>,
    orientation: Orientation,
}

impl VerbMatrix {
    /// Wraps stored rows, checking shape and sign.
    pub fn new(rows: Vec<Vec<Rational>>, orientation: Orientation) -> Result<Self, DistribError> {
        let n = rows.len();
        for r in &rows {
            check_dims(n, r.len())?;
            if r.iter().any(Signed::is_negative) {
                return Err(DistribError::NegativeEntry);
            }
        }
        Ok(VerbMatrix { rows, orientation })
    }

    /// Builds a matrix from integer rows.
    pub fn from_ints(rows: &[&[u64]], orientation: Orientation) -> Result<Self, DistribError> {
        VerbMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&c| Rational::from_integer(c as i64)).collect())
                .collect(),
            orientation,
        )
    }

    /// The zero matrix.
    pub fn zeros(dim: usize, orientation: Orientation) -> Self {
        VerbMatrix {
            rows: alloc::vec![alloc::vec![Rational::zero(); dim]; dim],
            orientation,
        }
    }

    /// Rows as stored.
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Storage orientation.
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Dimension of the noun basis.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Entry for subject index `s` and object index `o`.
    pub fn subject_object(&self, s: usize, o: usize) -> Rational {
        match self.orientation {
            Orientation::SubjectObject => self.rows[s][o],
            Orientation::ObjectSubject => self.rows[o][s],
        }
    }

    /// Adds `value` at subject `s`, object `o`.
    pub(crate) fn add_subject_object(&mut self, s: usize, o: usize, value: Rational) {
        match self.orientation {
            Orientation::SubjectObject => self.rows[s][o] += value,
            Orientation::ObjectSubject => self.rows[o][s] += value,
        }
    }

    /// The same relation stored with the other orientation.
    pub fn transposed(&self) -> VerbMatrix {
        let n = self.dim();
        let rows = (0..n).map(|i| (0..n).map(|j| self.rows[j][i]).collect()).collect();
        let orientation = match self.orientation {
            Orientation::SubjectObject => Orientation::ObjectSubject,
            Orientation::ObjectSubject => Orientation::SubjectObject,
        };
        VerbMatrix { rows, orientation }
    }
}

/// Words keyed case-insensitively, remembering their original spelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordMap<T> {
    map: BTreeMap<String, (String, T)>,
}

impl<T> Default for WordMap<T> {
    fn default() -> Self {
        WordMap { map: BTreeMap::new() }
    }
}

impl<T> WordMap<T> {
    /// An empty map.
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts or replaces `word`.
    pub fn insert(&mut self, word: impl Into<String>, value: T) {
        let word = word.into();
        self.map.insert(fold(&word), (word, value));
    }

    /// Looks `word` up ignoring case.
    pub fn get(&self, word: &str) -> Option<&T> {
        self.map.get(&fold(word)).map(|(_, v)| v)
    }

    /// Whether `word` is present.
    pub fn contains(&self, word: &str) -> bool {
        self.map.contains_key(&fold(word))
    }

    /// Entries in case-folded order, with original spelling.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &T)> {
        self.map.values().map(|(k, v)| (k.as_str(), v))
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    /// Whether the map is empty.
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

impl<T> FromIterator<(String, T)> for WordMap<T> {
    fn from_iter<I: IntoIterator<Item = (String, T)>>(iter: I) -> Self {
        let mut m = WordMap::new();
        for (k, v) in iter {
            m.insert(k, v);
        }
        m
    }
}

/// Everything needed to evaluate sentences of one language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistribModel {
    /// Language of the model.
    pub language: Language,
    /// Basis labels; `arg-A` marks an adjective-argument column.
    pub basis: Vec<String>,
    /// Noun vectors.
    pub nouns: WordMap<NounVector>,
    /// Verb matrices, keyed by lemma.
    pub verbs: WordMap<VerbMatrix>,
    /// Adjective vectors.
    pub adjectives: WordMap<NounVector>,
    /// Summed argument vectors of preposition phrases (informational; noun
    /// modification uses the prepositional object's noun vector).
    pub pp_heads: WordMap<NounVector>,
}

impl DistribModel {
    /// An empty model over `basis`.
    pub fn new(language: Language, basis: Vec<String>) -> Self {
        DistribModel {
            language,
            basis,
            nouns: WordMap::new(),
            verbs: WordMap::new(),
            adjectives: WordMap::new(),
            pp_heads: WordMap::new(),
        }
    }

    /// Basis dimension.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Checks that every vector and matrix has the basis dimension.
    pub fn validate(&self) -> Result<(), DistribError> {
        let n = self.dim();
        for (_, v) in self
            .nouns
            .iter()
            .chain(self.adjectives.iter())
            .chain(self.pp_heads.iter())
        {
            check_dims(n, v.dim())?;
        }
        for (_, m) in self.verbs.iter() {
            check_dims(n, m.dim())?;
        }
        Ok(())
    }

    /// Noun vector for `word`.
    pub fn noun(&self, word: &str) -> Result<&NounVector, DistribError> {
        self.nouns.get(word).ok_or_else(|| missing(word, WordKind::Noun))
    }

    /// Adjective vector for `word`.
    pub fn adjective(&self, word: &str) -> Result<&NounVector, DistribError> {
        self.adjectives
            .get(word)
            .ok_or_else(|| missing(word, WordKind::Adjective))
    }

    /// Verb matrix for `word`.
    pub fn verb(&self, word: &str) -> Result<&VerbMatrix, DistribError> {
        self.verbs.get(word).ok_or_else(|| missing(word, WordKind::Verb))
    }
}

fn missing(word: &str, kind: WordKind) -> DistribError {
    DistribError::MissingWord {
        word: word.to_string(),
        kind,
    }
}

/// Kind of meaning looked up in a model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordKind {
    /// Noun vector.
    Noun,
    /// Adjective vector.
    Adjective,
    /// Verb matrix.
    Verb,
}

impl fmt::Display for WordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordKind::Noun => "noun vector",
            WordKind::Adjective => "adjective vector",
            WordKind::Verb => "verb matrix",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_views_agree() {
        let m = VerbMatrix::from_ints(&[&[1, 2], &[3, 4]], Orientation::ObjectSubject).unwrap();
        assert_eq!(m.subject_object(0, 1), Rational::from_integer(3));
        let t = m.transposed();
        assert_eq!(t.orientation(), Orientation::SubjectObject);
        assert_eq!(t.subject_object(0, 1), Rational::from_integer(3));
    }

    #[test]
    fn negative_entries_rejected() {
        assert_eq!(
            NounVector::new(alloc::vec![Rational::from_integer(-1)]),
            Err(DistribError::NegativeEntry)
        );
        assert!(VerbMatrix::from_ints(&[&[1, 2]], Orientation::SubjectObject).is_err());
    }

    #[test]
    fn word_map_ignores_case() {
        let mut m = WordMap::new();
        m.insert("Impire", 1);
        assert_eq!(m.get("impire"), Some(&1));
        assert_eq!(m.iter().next(), Some(("Impire", &1)));
    }
}
