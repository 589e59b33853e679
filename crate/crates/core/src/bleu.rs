//! Sentence-level BLEU with brevity penalty and optional smoothing.
//!
//! `BLEU = BP · exp(Σ_{n=1..4} ¼ log p_n)` where `p_n` is the clipped
//! n-gram precision of the candidate against a single reference and
//! `BP = exp(1 - |R|/|C|)` when `|C| ≤ |R|`, else 1.
//!
//! Smoothing method 7 of Chen and Cherry replaces zero precisions by a
//! decaying substitute scaled by the candidate length (method 4) and then
//! averages each precision with its neighbours (method 5). Two variants are
//! provided:
//!
//! - [`Smoothing::Method7`] follows the published definition and agrees
//!   with current NLTK: the `i`-th zero precision (counting from 1) becomes
//!   `ln|C| / (2^i · k · d_n)` where `d_n` is the n-gram count.
//! - [`Smoothing::Method7Nltk32`] reproduces NLTK 3.2 and earlier, where a
//!   zero precision at order `n` becomes `1 / (n - 1 + k / ln|C|)`.
//!
//! In both, `k = 5`, the averaging uses `p_1 + 1` as the left neighbour of
//! `p_1` and the unsmoothed 5-gram precision as the right neighbour of
//! `p_4`. Averaging precisions rather than counts means a smoothed score can
//! exceed 1 (an identical pair scores about 1.117); this matches the
//! reference implementations, so scores are not clamped.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::corpus::{fold, split_words, MultiwordTable};

/// Highest n-gram order in the score.
pub const MAX_ORDER: usize = 4;
/// Length constant of smoothing method 4.
pub const METHOD4_K: f64 = 5.0;

/// Errors raised by BLEU.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BleuError {
    /// The candidate has no tokens.
    #[error("the candidate sentence is empty")]
    EmptyCandidate,
    /// NLTK 3.2 smoothing divides by `ln 1` for one-token candidates.
    #[error("legacy method 7 smoothing is undefined for a one-token candidate")]
    UndefinedForSingleToken,
}

/// Smoothing applied to the precisions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Smoothing {
    /// No smoothing: any zero precision gives a zero score.
    None,
    /// Chen–Cherry method 7 (methods 4 then 5), published definition.
    Method7,
    /// Method 7 as implemented in NLTK 3.2 and earlier.
    Method7Nltk32,
}

impl Smoothing {
    /// Name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Smoothing::None => "none",
            Smoothing::Method7 => "method7",
            Smoothing::Method7Nltk32 => "method7-nltk32",
        }
    }
}

impl fmt::Display for Smoothing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error for an unrecognised smoothing name.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown smoothing `{0}` (expected none, method7 or method7-nltk32)")]
pub struct UnknownSmoothing(pub String);

impl FromStr for Smoothing {
    type Err = UnknownSmoothing;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Smoothing::None),
            "method7" => Ok(Smoothing::Method7),
            "method7-nltk32" => Ok(Smoothing::Method7Nltk32),
            other => Err(UnknownSmoothing(other.into())),
        }
    }
}

/// A clipped n-gram precision as an unreduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Precision {
    /// Candidate n-grams also found in the reference (clipped).
    pub matched: usize,
    /// Candidate n-grams in total (0 when the candidate is shorter than n).
    pub total: usize,
}

impl Precision {
    /// Value of the fraction, with `0/0` read as 0.
    pub fn value(self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.matched as f64 / self.total as f64
        }
    }

    fn smoothing_denominator(self) -> f64 {
        self.total.max(1) as f64
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.matched, self.total)
    }
}

/// Full result of a BLEU computation.
#[derive(Debug, Clone, PartialEq)]
pub struct BleuReport {
    /// Unsmoothed precisions for n = 1..4.
    pub precisions: [Precision; MAX_ORDER],
    /// Precisions after smoothing.
    pub smoothed: [f64; MAX_ORDER],
    /// Brevity penalty.
    pub brevity_penalty: f64,
    /// Final score (in `[0, 1]` without smoothing).
    pub score: f64,
    /// Smoothing used.
    pub smoothing: Smoothing,
}

fn ngram_counts<S: AsRef<str>>(tokens: &[S], n: usize) -> BTreeMap<Vec<String>, usize> {
    let mut counts = BTreeMap::new();
    if n == 0 || tokens.len() < n {
        return counts;
    }
    let folded: Vec<String> = tokens.iter().map(|t| fold(t.as_ref())).collect();
    for w in folded.windows(n) {
        *counts.entry(w.to_vec()).or_insert(0) += 1;
    }
    counts
}

/// Clipped n-gram precision of `candidate` against `reference`.
pub fn modified_precision<S: AsRef<str>, T: AsRef<str>>(reference: &[S], candidate: &[T], n: usize) -> Precision {
    let cand = ngram_counts(candidate, n);
    let refc = ngram_counts(reference, n);
    let matched = cand
        .iter()
        .map(|(g, &c)| c.min(refc.get(g).copied().unwrap_or(0)))
        .sum();
    Precision {
        matched,
        total: cand.values().sum(),
    }
}

/// `exp(1 - r/c)` if `c ≤ r`, else 1; zero for an empty candidate.
pub fn brevity_penalty(reference_len: usize, candidate_len: usize) -> f64 {
    if candidate_len > reference_len {
        1.0
    } else if candidate_len == 0 {
        0.0
    } else {
        libm::exp(1.0 - reference_len as f64 / candidate_len as f64)
    }
}

/// BLEU of `candidate` against `reference`; tokens compare case-insensitively.
pub fn bleu<S: AsRef<str>, T: AsRef<str>>(
    reference: &[S],
    candidate: &[T],
    smoothing: Smoothing,
) -> Result<BleuReport, BleuError> {
    if candidate.is_empty() {
        return Err(BleuError::EmptyCandidate);
    }
    let mut precisions = [Precision { matched: 0, total: 0 }; MAX_ORDER];
    for (i, p) in precisions.iter_mut().enumerate() {
        *p = modified_precision(reference, candidate, i + 1);
    }
    let bp = brevity_penalty(reference.len(), candidate.len());
    let raw = precisions.map(Precision::value);
    let zero_report = |smoothed| BleuReport {
        precisions,
        smoothed,
        brevity_penalty: bp,
        score: 0.0,
        smoothing,
    };
    if precisions[0].matched == 0 {
        return Ok(zero_report(raw));
    }
    let len = candidate.len();
    let smoothed = match smoothing {
        Smoothing::None => {
            if precisions.iter().any(|p| p.matched == 0) {
                return Ok(zero_report(raw));
            }
            raw
        }
        Smoothing::Method7 => {
            let fifth = modified_precision(reference, candidate, MAX_ORDER + 1);
            neighbour_average(method4(&precisions, len), fifth)
        }
        Smoothing::Method7Nltk32 => {
            let fifth = modified_precision(reference, candidate, MAX_ORDER + 1);
            neighbour_average(method4_nltk32(&precisions, len)?, fifth)
        }
    };
    let log_sum: f64 = smoothed
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| libm::log(p) / MAX_ORDER as f64)
        .sum();
    Ok(BleuReport {
        precisions,
        smoothed,
        brevity_penalty: bp,
        score: bp * libm::exp(log_sum),
        smoothing,
    })
}

fn method4(precisions: &[Precision; MAX_ORDER], len: usize) -> [f64; MAX_ORDER] {
    let mut out = precisions.map(Precision::value);
    if len <= 1 {
        return out;
    }
    let ln = libm::log(len as f64);
    let mut zeros = 0;
    for (i, p) in precisions.iter().enumerate() {
        if p.matched == 0 {
            zeros += 1;
            let substitute = 1.0 / (libm::pow(2.0, zeros as f64) * METHOD4_K / ln);
            out[i] = substitute / p.smoothing_denominator();
        }
    }
    out
}

fn method4_nltk32(precisions: &[Precision; MAX_ORDER], len: usize) -> Result<[f64; MAX_ORDER], BleuError> {
    let mut out = precisions.map(Precision::value);
    for (i, p) in precisions.iter().enumerate() {
        if p.matched == 0 {
            if len == 1 {
                return Err(BleuError::UndefinedForSingleToken);
            }
            out[i] = 1.0 / (i as f64 + METHOD4_K / libm::log(len as f64));
        }
    }
    Ok(out)
}

fn neighbour_average(p: [f64; MAX_ORDER], fifth: Precision) -> [f64; MAX_ORDER] {
    let mut out = p;
    let mut left = p[0] + 1.0;
    for i in 0..MAX_ORDER {
        let right = if i + 1 < MAX_ORDER { p[i + 1] } else { fifth.value() };
        out[i] = (left + p[i] + right) / 3.0;
        left = out[i];
    }
    out
}

/// Tokens for BLEU: words with edge punctuation removed, person names from
/// `names` merged, lowercased.
pub fn tokens(text: &str, names: &MultiwordTable) -> Vec<String> {
    names.merge(&split_words(text)).iter().map(|t| fold(t)).collect()
}
