//! Sentence meanings in `N ⊗ N` and their similarity.

use alloc::collections::BTreeMap;
use core::fmt;

use num_traits::Zero;

use crate::numeric::{to_f64, Rational};

/// A sparse element `Σ c_ij n_i ⊗ n_j` of the sentence space, indexed with
/// the subject first. Indices are zero-based; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SentenceMeaning {
    coeffs: BTreeMap<(usize, usize), Rational>,
}

impl SentenceMeaning {
    /// The zero meaning.
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds a meaning from `(i, j, c)` triples, summing repeats.
    pub fn from_entries<I: IntoIterator<Item = (usize, usize, Rational)>>(entries: I) -> Self {
        let mut m = SentenceMeaning::zero();
        for (i, j, c) in entries {
            m.add(i, j, c);
        }
        m
    }

    /// Adds `c` to the coefficient at `(i, j)`.
    pub fn add(&mut self, i: usize, j: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((i, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    /// Coefficient at `(i, j)` (zero-based).
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs.get(&(i, j)).copied().unwrap_or_else(Rational::zero)
    }

    /// Non-zero coefficients in index order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), Rational)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }

    /// Number of non-zero coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Whether this is the zero meaning.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same as [`SentenceMeaning::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Every coefficient multiplied by `factor`.
    pub fn scaled(&self, factor: Rational) -> SentenceMeaning {
        SentenceMeaning::from_entries(self.iter().map(|((i, j), c)| (i, j, c * factor)))
    }
}

impl fmt::Display for SentenceMeaning {
    /// Writes `320 n2⊗n1 + 32 n2⊗n2` with one-based indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((i, j), c)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} n{}⊗n{}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

/// Inner product of two meanings.
pub fn inner(a: &SentenceMeaning, b: &SentenceMeaning) -> Rational {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .iter()
        .map(|(k, c)| c * large.coeffs.get(&k).copied().unwrap_or_else(Rational::zero))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Self inner product `⟨m|m⟩`, called the length of `m`.
pub fn length(m: &SentenceMeaning) -> Rational {
    inner(m, m)
}

/// Inner product, both lengths and the resulting score.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similarity {
    /// `⟨a|b⟩`.
    pub inner: Rational,
    /// `⟨a|a⟩`.
    pub length_a: Rational,
    /// `⟨b|b⟩`.
    pub length_b: Rational,
    /// `⟨a|b⟩ / √(⟨a|a⟩⟨b|b⟩)`, or 0 if either meaning is zero.
    pub score: f64,
}

/// Compares two meanings.
pub fn compare(a: &SentenceMeaning, b: &SentenceMeaning) -> Similarity {
    let inner_ab = inner(a, b);
    let length_a = length(a);
    let length_b = length(b);
    let score = if a.is_zero() || b.is_zero() {
        0.0
    } else {
        to_f64(inner_ab) / libm::sqrt(to_f64(length_a) * to_f64(length_b))
    };
    Similarity {
        inner: inner_ab,
        length_a,
        length_b,
        score,
    }
}

/// Similarity score of two meanings in `[0, 1]`.
pub fn similarity(a: &SentenceMeaning, b: &SentenceMeaning) -> f64 {
    compare(a, b).score
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn zeros_are_not_stored() {
        let mut m = SentenceMeaning::zero();
        m.add(0, 0, r(2));
        m.add(0, 0, r(-2));
        m.add(1, 1, r(0));
        assert!(m.is_zero());
    }

    #[test]
    fn palpatine_pair_numbers() {
        let a = SentenceMeaning::from_entries([(1, 0, r(320)), (1, 1, r(32))]);
        let b = SentenceMeaning::from_entries([(1, 0, r(330)), (1, 1, r(40))]);
        let s = compare(&a, &b);
        assert_eq!(s.inner, r(106880));
        assert_eq!(s.length_a, r(103424));
        assert_eq!(s.length_b, r(110500));
        assert_eq!(a.to_string(), "320 n2⊗n1 + 32 n2⊗n2");
    }

    #[test]
    fn zero_meaning_scores_zero() {
        let a = SentenceMeaning::from_entries([(0, 0, r(1))]);
        assert_eq!(similarity(&a, &SentenceMeaning::zero()), 0.0);
        assert_eq!(similarity(&a, &a), 1.0);
    }
}
