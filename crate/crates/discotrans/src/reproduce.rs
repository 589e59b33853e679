//! Regression suites over the bundled data.
//!
//! Each suite yields rows of `expected` against `computed` with a verdict.
//! Gating rows decide the overall result; diagnostic rows are reported
//! only. Printed decimals match when the computed value truncates or
//! rounds half-up to them; integers and meanings must match exactly.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use discotrans_core::bleu::{bleu, tokens, Smoothing};
use discotrans_core::concepts::{
    extract_descriptors, Concept, ConceptBuilder, ConvexSet, Descriptors, NodeId, Point, PropertySchema,
};
use discotrans_core::distrib::{compare, SentenceMeaning, Similarity};
use discotrans_core::metric::{concept_distance, translate_noun};
use discotrans_core::numeric::{matches_printed, Rational};
use discotrans_core::Language;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures::{Fixtures, LanguageData};
use crate::pipeline::{build_model, evaluate_sentence, evaluate_sentence_in, tokenize_corpus, WINDOW_RADIUS};

/// Half-width of the band around printed BLEU scores.
pub const BLEU_BAND: f64 = 0.05;
/// Tolerance against the frozen reference BLEU scores.
pub const BLEU_CONFORMANCE_TOLERANCE: f64 = 1e-9;
/// Tolerance on concept distances.
pub const DISTANCE_TOLERANCE: f64 = 1e-9;

/// Reference and candidate pairs with method 7 scores from the current and
/// the legacy reference implementation, tab separated.
const BLEU_CONFORMANCE: &str = include_str!("../../core/tests/data/bleu_conformance.tsv");

/// A group of regression rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// English sentence meanings from the fixture model.
    Contraction,
    /// The first English/Irish pair and the mismatched Yoda pair.
    Crosslingual,
    /// The seven-row similarity table.
    Similarity,
    /// The relative-clause sentence in Irish.
    RelativeClause,
    /// BLEU table and reference conformance.
    Bleu,
    /// Concepts built from the descriptor tables.
    Concepts,
    /// Concept distances and translation.
    Metric,
    /// Non-gating comparisons: corpus-derived values and printed values
    /// that disagree with the definitions.
    Diagnostics,
}

impl Suite {
    /// All suites in report order.
    pub const ALL: [Suite; 8] = [
        Suite::Contraction,
        Suite::Crosslingual,
        Suite::Similarity,
        Suite::RelativeClause,
        Suite::Bleu,
        Suite::Concepts,
        Suite::Metric,
        Suite::Diagnostics,
    ];

    /// Name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Contraction => "contraction",
            Suite::Crosslingual => "crosslingual",
            Suite::Similarity => "similarity",
            Suite::RelativeClause => "relative-clause",
            Suite::Bleu => "bleu",
            Suite::Concepts => "concepts",
            Suite::Metric => "metric",
            Suite::Diagnostics => "diagnostics",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// One comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    /// Suite the row belongs to.
    pub suite: Suite,
    /// What is compared.
    pub label: String,
    /// Expected value as text.
    pub expected: String,
    /// Computed value as text.
    pub computed: String,
    /// Whether they agree.
    pub pass: bool,
    /// Whether the row counts towards the overall verdict.
    pub gating: bool,
}

/// Rows of the requested suites plus notes on the conventions used.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    /// All rows in suite order.
    pub rows: Vec<Row>,
    /// Conventions that affect the numbers.
    pub notes: Vec<String>,
}

impl Report {
    /// Whether every gating row passes.
    pub fn passed(&self) -> bool {
        self.rows.iter().filter(|r| r.gating).all(|r| r.pass)
    }

    /// Rows of one suite.
    pub fn suite(&self, suite: Suite) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(move |r| r.suite == suite)
    }

    /// A plain-text table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for suite in Suite::ALL {
            let rows: Vec<&Row> = self.suite(suite).collect();
            if rows.is_empty() {
                continue;
            }
            let passed = rows.iter().filter(|r| r.pass).count();
            let _ = writeln!(out, "== {suite} ({passed}/{} pass)", rows.len());
            for r in rows {
                let verdict = match (r.pass, r.gating) {
                    (true, _) => "PASS",
                    (false, true) => "FAIL",
                    (false, false) => "DIFF",
                };
                let _ = writeln!(
                    out,
                    "{verdict}  {}: expected {}, computed {}",
                    r.label, r.expected, r.computed
                );
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(out, "overall: {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

struct Rows {
    suite: Suite,
    gating: bool,
    rows: Vec<Row>,
}

impl Rows {
    fn new(suite: Suite) -> Self {
        Rows {
            suite,
            gating: suite != Suite::Diagnostics,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, label: impl Into<String>, expected: String, computed: String, pass: bool) {
        self.rows.push(Row {
            suite: self.suite,
            label: label.into(),
            expected,
            computed,
            pass,
            gating: self.gating,
        });
    }

    fn exact(&mut self, label: impl Into<String>, expected: impl fmt::Display, computed: impl fmt::Display) {
        let (e, c) = (expected.to_string(), computed.to_string());
        let pass = e == c;
        self.push(label, e, c, pass);
    }

    fn printed(&mut self, label: impl Into<String>, printed: f64, decimals: u32, computed: f64) {
        let pass = matches_printed(computed, printed, decimals);
        self.push(label, format!("{printed}"), format!("{computed:.5}"), pass);
    }

    fn within(&mut self, label: impl Into<String>, expected: f64, tolerance: f64, computed: f64) {
        let pass = (computed - expected).abs() <= tolerance;
        self.push(
            label,
            format!("{expected} ± {tolerance}"),
            format!("{computed:.6}"),
            pass,
        );
    }

    fn failed(&mut self, label: impl Into<String>, expected: impl fmt::Display, error: &Error) {
        self.push(label, expected.to_string(), format!("error: {error}"), false);
    }
}

fn meaning(entries: &[((usize, usize), i64)]) -> SentenceMeaning {
    SentenceMeaning::from_entries(
        entries
            .iter()
            .map(|&((i, j), c)| (i - 1, j - 1, Rational::from_integer(c))),
    )
}

const MASTERMIND: &str = "Palpatine is a mastermind who turns Anakin to the dark side of the Force";
const MASTERMIND_GA: &str = "Is ceannmáistir a casann Anakin go taobh dorcha na Fórsa é Palpatine";

fn mastermind_variant(subject: &str) -> String {
    MASTERMIND.replacen("Palpatine", subject, 1)
}

/// Every sentence the gating suites evaluate, with its language, without
/// repeats.
pub fn fixture_sentences() -> Vec<(Language, String)> {
    let mut out: Vec<(Language, String)> = Vec::new();
    let mut push = |lang: Language, s: String| {
        if !out.iter().any(|(l, x)| *l == lang && *x == s) {
            out.push((lang, s));
        }
    };
    push(Language::English, MASTERMIND.into());
    for subject in ["Mace Windu", "The Emperor", "Padmé"] {
        push(Language::English, mastermind_variant(subject));
    }
    push(Language::Irish, MASTERMIND_GA.into());
    for (_, en, ga, ..) in CROSSLINGUAL {
        push(Language::English, en.into());
        push(Language::Irish, ga.into());
    }
    for (en, ga, _) in SIMILARITY_TABLE {
        push(Language::English, en.into());
        push(Language::Irish, ga.into());
    }
    out
}

fn pair(a: &str, a_data: &LanguageData, b: &str, b_data: &LanguageData) -> Result<Similarity> {
    let x = evaluate_sentence(a, a_data)?;
    let y = evaluate_sentence(b, b_data)?;
    Ok(compare(&x.meaning, &y.meaning))
}

fn contraction(f: &Fixtures) -> Vec<Row> {
    let mut rows = Rows::new(Suite::Contraction);
    let en = &f.english;
    match evaluate_sentence(MASTERMIND, en) {
        Ok(s) => {
            rows.exact(
                "mastermind sentence meaning",
                meaning(&[((2, 1), 320), ((2, 2), 32)]),
                &s.meaning,
            );
            rows.exact(
                "mastermind sentence length",
                103424,
                discotrans_core::distrib::length(&s.meaning),
            );
        }
        Err(e) => rows.failed("mastermind sentence meaning", "320 n2⊗n1 + 32 n2⊗n2", &e),
    }
    for (subject, printed) in [("Mace Windu", 0.53), ("The Emperor", 0.99), ("Padmé", 0.0)] {
        let label = format!("similarity with the {subject} variant");
        match pair(MASTERMIND, en, &mastermind_variant(subject), en) {
            Ok(s) => rows.printed(label, printed, 2, s.score),
            Err(e) => rows.failed(label, printed, &e),
        }
    }
    rows.rows
}

fn similarity_parts(rows: &mut Rows, label: &str, s: &Similarity, inner: i64, lengths: (i64, i64)) {
    rows.exact(format!("{label}: inner product"), inner, s.inner);
    rows.exact(format!("{label}: first length"), lengths.0, s.length_a);
    rows.exact(format!("{label}: second length"), lengths.1, s.length_b);
}

/// Label, English, Irish, inner product, lengths and printed score.
type CrosslingualCase = (&'static str, &'static str, &'static str, i64, (i64, i64), f64);

const CROSSLINGUAL: [CrosslingualCase; 2] = [
    (
        "evil Emperor pair",
        "Palpatine is an evil Emperor",
        "Is Impire olc é Palpatine",
        10174,
        (10182, 10180),
        0.99,
    ),
    (
        "Yoda / cróga pair",
        "Yoda is a powerful Jedi",
        "Is Jedi cróga é Palpatine",
        8,
        (348, 4),
        0.21,
    ),
];

fn crosslingual(f: &Fixtures) -> Vec<Row> {
    let mut rows = Rows::new(Suite::Crosslingual);
    for (label, a, b, inner, lengths, printed) in CROSSLINGUAL {
        match pair(a, &f.english, b, &f.irish) {
            Ok(s) => {
                similarity_parts(&mut rows, label, &s, inner, lengths);
                rows.printed(format!("{label}: score"), printed, 2, s.score);
            }
            Err(e) => rows.failed(label, printed, &e),
        }
    }
    rows.rows
}

/// The similarity table: English, Irish, printed score.
pub const SIMILARITY_TABLE: [(&str, &str, f64); 7] = [
    ("Yoda is a powerful Jedi", "Is Jedi cumhachtach é Yoda", 0.94),
    ("Palpatine is an evil Emperor", "Is Impire olc é Palpatine", 0.99),
    ("A brave Padmé turns to Anakin", "Casann Padmé cróga chuig Anakin", 1.0),
    (
        "Obi Wan turns to the powerful Yoda",
        "Casann Obi-Wan go Yoda cumhachtach",
        0.87,
    ),
    ("Padmé is a brave Jedi", "Is Jedi cróga é Padmé", 0.94),
    ("Anakin is a Sith Lord", "Is Tiarna Sith é Anakin", 0.32),
    (
        "The Jedi turn to the brave Mace Windu",
        "Casann na Jedi go Mace Windu cróga",
        0.99,
    ),
];

fn similarity(f: &Fixtures) -> Vec<Row> {
    let mut rows = Rows::new(Suite::Similarity);
    for (en, ga, printed) in SIMILARITY_TABLE {
        let label = format!("{en} / {ga}");
        match pair(en, &f.english, ga, &f.irish) {
            Ok(s) => rows.printed(label, printed, 2, s.score),
            Err(e) => rows.failed(label, printed, &e),
        }
    }
    rows.rows
}

fn relative_clause(f: &Fixtures) -> Vec<Row> {
    let mut rows = Rows::new(Suite::RelativeClause);
    let irish = match evaluate_sentence(MASTERMIND_GA, &f.irish) {
        Ok(s) => s.meaning,
        Err(e) => {
            rows.failed("Irish relative-clause meaning", "330 n2⊗n1 + 40 n2⊗n2", &e);
            return rows.rows;
        }
    };
    rows.exact(
        "Irish relative-clause meaning",
        meaning(&[((2, 1), 330), ((2, 2), 40)]),
        &irish,
    );
    let cases = [
        (
            "against the English sentence",
            MASTERMIND.to_string(),
            106880,
            (103424, 110500),
            0.999,
        ),
        (
            "against the Emperor variant",
            mastermind_variant("The Emperor"),
            534400,
            (2593792, 110500),
            0.998,
        ),
    ];
    for (label, english, inner, lengths, printed) in cases {
        match evaluate_sentence(&english, &f.english) {
            Ok(e) => {
                let s = compare(&e.meaning, &irish);
                similarity_parts(&mut rows, label, &s, inner, lengths);
                rows.printed(format!("{label}: score"), printed, 3, s.score);
            }
            Err(e) => rows.failed(label, printed, &e),
        }
    }
    rows.rows
}

/// The BLEU table: reference, candidate, language, printed similarity and
/// printed BLEU.
pub const BLEU_TABLE: [(&str, &str, bool, f64, f64); 4] = [
    (
        "Yoda is a powerful Jedi",
        "Yoda turns to the powerful Jedi",
        false,
        0.95,
        0.32,
    ),
    ("Anakin is a Sith Lord", "Obi-Wan is a Sith Lord", false, 0.0, 0.7),
    (
        "Is Impire olc é Palpatine",
        "Is Impire olc é Mace Windu",
        true,
        0.98,
        0.7,
    ),
    (
        "Casann na Jedi go Mace Windu cumhachtach",
        "Casann Ginearál Grievous go Mace Windu cróga",
        true,
        0.76,
        0.27,
    ),
];

fn bleu_row(f: &Fixtures, reference: &str, candidate: &str, irish: bool, smoothing: Smoothing) -> Result<f64> {
    let names = if irish {
        f.irish.text.names()
    } else {
        f.english.text.names()
    };
    let r = tokens(reference, &names);
    let c = tokens(candidate, &names);
    Ok(bleu(&r, &c, smoothing)?.score)
}

/// Frozen reference cases: reference, candidate, current and legacy scores.
pub fn bleu_conformance_cases() -> Vec<(Vec<String>, Vec<String>, f64, f64)> {
    BLEU_CONFORMANCE
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .filter_map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            let words = |s: &str| s.split_whitespace().map(String::from).collect();
            Some((
                words(f.first()?),
                words(f.get(1)?),
                f.get(2)?.parse().ok()?,
                f.get(3)?.parse().ok()?,
            ))
        })
        .collect()
}

fn bleu_suite(f: &Fixtures) -> Vec<Row> {
    let mut rows = Rows::new(Suite::Bleu);
    for (reference, candidate, irish, _, printed) in BLEU_TABLE {
        let label = format!("{reference} / {candidate}");
        match bleu_row(f, reference, candidate, irish, Smoothing::Method7Nltk32) {
            Ok(score) => rows.within(label, printed, BLEU_BAND, score),
            Err(e) => rows.failed(label, printed, &e),
        }
    }
    let cases = bleu_conformance_cases();
    for (smoothing, pick) in [(Smoothing::Method7, 0usize), (Smoothing::Method7Nltk32, 1)] {
        let mut worst = 0.0f64;
        let mut errors = 0;
        for (r, c, current, legacy) in &cases {
            let want = [*current, *legacy][pick];
            match bleu(r, c, smoothing) {
                Ok(rep) => worst = worst.max((rep.score - want).abs()),
                Err(_) => errors += 1,
            }
        }
        let pass = errors == 0 && cases.len() == 20 && worst <= BLEU_CONFORMANCE_TOLERANCE;
        rows.push(
            format!("{} against the reference on {} pairs", smoothing.name(), cases.len()),
            format!("max |Δ| ≤ {BLEU_CONFORMANCE_TOLERANCE:e}"),
            format!("max |Δ| = {worst:e}, {errors} errors"),
            pass,
        );
    }
    rows.rows
}

/// A printed region value.
#[derive(Debug, Clone, Copy)]
enum Printed {
    Scalar(f64),
    Rgb(&'static [[f64; 3]]),
    Vertices(&'static [&'static str]),
}

const RED: [f64; 3] = [255.0, 0.0, 0.0];
const GREEN: [f64; 3] = [0.0, 255.0, 0.0];
const ORANGE: [f64; 3] = [255.0, 165.0, 0.0];
const BROWN: [f64; 3] = [153.0, 76.0, 0.0];

type PrintedConcept = (&'static str, &'static [(&'static str, Printed)], &'static [u32]);

/// Printed property sets and tree node sets; unlisted properties are the
/// full domain.
const ENGLISH_CONCEPTS: [PrintedConcept; 5] = [
    (
        "Venus",
        &[
            ("dimension", Printed::Scalar(0.5)),
            ("intensity", Printed::Scalar(0.7)),
            ("temperature", Printed::Scalar(0.75)),
            ("density", Printed::Scalar(0.9)),
            ("texture", Printed::Scalar(0.9)),
        ],
        &[0, 1, 3, 5, 6, 7, 8, 9, 10, 12, 13, 15, 17],
    ),
    (
        "Jupiter",
        &[
            ("dimension", Printed::Scalar(0.7)),
            ("colour", Printed::Rgb(&[ORANGE, BROWN, RED])),
            ("intensity", Printed::Scalar(0.8)),
            ("temperature", Printed::Scalar(0.0)),
            ("density", Printed::Scalar(0.1)),
        ],
        &[0, 1, 2, 3, 4, 6, 7, 9, 10, 13, 15],
    ),
    (
        "Mars",
        &[
            ("dimension", Printed::Scalar(0.25)),
            ("colour", Printed::Rgb(&[RED, BROWN, ORANGE])),
            ("temperature", Printed::Scalar(0.4)),
            ("texture", Printed::Scalar(0.9)),
        ],
        &[0, 1, 2, 3, 4, 7, 10, 15],
    ),
    (
        "Apple",
        &[
            ("colour", Printed::Rgb(&[RED, GREEN])),
            ("taste", Printed::Vertices(&["Bitter", "Sweet"])),
            ("texture", Printed::Scalar(0.4)),
        ],
        &[0, 1, 3, 6, 7, 9, 11, 13, 16, 18],
    ),
    (
        "Sun",
        &[
            ("dimension", Printed::Scalar(1.0)),
            ("intensity", Printed::Scalar(1.0)),
            ("temperature", Printed::Scalar(1.0)),
            ("density", Printed::Scalar(1.0)),
        ],
        &[0, 1, 3, 6, 7, 9, 10, 13, 14],
    ),
];

const IRISH_CONCEPTS: [PrintedConcept; 5] = [
    (
        "Véineas",
        &[
            ("dimension", Printed::Scalar(0.5)),
            ("intensity", Printed::Scalar(0.6)),
            ("temperature", Printed::Scalar(0.85)),
            ("density", Printed::Scalar(0.9)),
            ("texture", Printed::Scalar(0.9)),
        ],
        &[0, 1, 3, 5, 6, 7, 8, 9, 10, 12, 13, 15, 17],
    ),
    (
        "Iúpatar",
        &[
            ("dimension", Printed::Scalar(0.8)),
            ("colour", Printed::Rgb(&[ORANGE, BROWN, RED])),
            ("intensity", Printed::Scalar(0.7)),
            ("temperature", Printed::Scalar(0.1)),
            ("density", Printed::Scalar(0.1)),
        ],
        &[0, 1, 2, 3, 4, 6, 7, 9, 10, 13, 15],
    ),
    (
        "Mars",
        &[
            ("dimension", Printed::Scalar(0.25)),
            ("colour", Printed::Rgb(&[RED, BROWN, ORANGE])),
            ("temperature", Printed::Scalar(0.4)),
            ("texture", Printed::Scalar(0.9)),
        ],
        &[0, 1, 2, 3, 4, 7, 10, 15],
    ),
    (
        "Úll",
        &[
            ("colour", Printed::Rgb(&[RED, GREEN])),
            ("taste", Printed::Vertices(&["Bitter", "Sweet"])),
            ("texture", Printed::Scalar(0.4)),
        ],
        &[0, 1, 3, 6, 7, 9, 11, 13, 16, 18],
    ),
    (
        "Grian",
        &[
            ("dimension", Printed::Scalar(0.9)),
            ("intensity", Printed::Scalar(1.0)),
            ("temperature", Printed::Scalar(0.85)),
            ("density", Printed::Scalar(1.0)),
        ],
        &[0, 1, 3, 6, 7, 9, 10, 13, 14],
    ),
];

fn printed_region(value: Printed, property: &str, schema: &PropertySchema) -> Result<ConvexSet> {
    let points: Vec<Point> = match value {
        Printed::Scalar(x) => vec![Point::scalar(x)?],
        Printed::Rgb(colours) => colours
            .iter()
            .map(|c| Point::new(c.iter().map(|x| x / 255.0).collect()))
            .collect::<std::result::Result<_, _>>()?,
        Printed::Vertices(names) => {
            let domain = &schema
                .get(property)
                .ok_or_else(|| Error::Unknown {
                    kind: "property",
                    name: property.into(),
                })?
                .domain;
            names
                .iter()
                .map(|n| {
                    domain.vertex(n).cloned().ok_or_else(|| Error::Unknown {
                        kind: "vertex",
                        name: (*n).into(),
                    })
                })
                .collect::<Result<_>>()?
        }
    };
    Ok(ConvexSet::hull(points)?)
}

fn describe_set(set: &ConvexSet) -> String {
    match set {
        ConvexSet::Full => "full".into(),
        ConvexSet::Hull(points) => {
            let items: Vec<String> = points.iter().map(|p| p.to_string()).collect();
            format!("conv{{{}}}", items.join(", "))
        }
    }
}

fn describe_regions(concept: &Concept) -> String {
    let parts: Vec<String> = concept
        .regions()
        .iter()
        .filter(|r| !r.set.is_full())
        .map(|r| format!("{} {}", r.property, describe_set(&r.set)))
        .collect();
    parts.join("; ")
}

fn describe_nodes<'a>(nodes: impl IntoIterator<Item = &'a NodeId>) -> String {
    let ids: Vec<String> = nodes.into_iter().map(NodeId::to_string).collect();
    format!("{{{}}}", ids.join(", "))
}

/// Concepts built from a language's descriptor table, in table order.
pub fn descriptor_concepts(f: &Fixtures, data: &LanguageData) -> Result<Vec<(String, Concept)>> {
    let builder = ConceptBuilder::new(&f.schema, &data.adjectives, &data.tree).with_lemmas(data.text.lemmas());
    data.descriptors
        .nouns
        .iter()
        .map(|(name, d)| Ok((name.clone(), builder.build(d)?.concept)))
        .collect()
}

fn concept_rows(rows: &mut Rows, f: &Fixtures, data: &LanguageData, printed: &[PrintedConcept]) -> Result<()> {
    let built = descriptor_concepts(f, data)?;
    for (name, properties, nodes) in printed {
        let Some((_, concept)) = built.iter().find(|(n, _)| n == name) else {
            rows.push(
                format!("{name}: property sets"),
                "a concept".into(),
                "missing".into(),
                false,
            );
            continue;
        };
        let mut sets = vec![ConvexSet::Full; f.schema.properties().len()];
        for (property, value) in *properties {
            let index = f.schema.index(property).ok_or_else(|| Error::Unknown {
                kind: "property",
                name: (*property).into(),
            })?;
            sets[index] = printed_region(*value, property, &f.schema)?;
        }
        let expected_nodes = nodes.iter().map(|&i| NodeId(i)).collect();
        let expected = Concept::new(&f.schema, &data.tree, sets, expected_nodes)?;
        let regions_match = expected.regions() == concept.regions();
        rows.push(
            format!("{name}: property sets"),
            describe_regions(&expected),
            describe_regions(concept),
            regions_match,
        );
        rows.exact(
            format!("{name}: tree node set"),
            describe_nodes(&expected.tree_set().nodes),
            describe_nodes(&concept.tree_set().nodes),
        );
    }
    Ok(())
}

fn concepts(f: &Fixtures) -> Vec<Row> {
    let mut rows = Rows::new(Suite::Concepts);
    for (data, printed) in [(&f.english, &ENGLISH_CONCEPTS), (&f.irish, &IRISH_CONCEPTS)] {
        if let Err(e) = concept_rows(&mut rows, f, data, printed) {
            rows.failed(format!("{} concepts", data.language.code()), "built", &e);
        }
    }
    rows.rows
}

fn find<'a>(list: &'a [(String, Concept)], name: &str) -> Result<&'a Concept> {
    list.iter()
        .find(|(n, _)| n == name)
        .map(|(_, c)| c)
        .ok_or_else(|| Error::Unknown {
            kind: "concept",
            name: name.into(),
        })
}

/// Expected Irish to English translations.
pub const TRANSLATIONS: [(&str, &str); 5] = [
    ("Véineas", "Venus"),
    ("Iúpatar", "Jupiter"),
    ("Mars", "Mars"),
    ("Úll", "Apple"),
    ("Grian", "Sun"),
];

fn metric_rows(rows: &mut Rows, f: &Fixtures) -> Result<()> {
    let en = descriptor_concepts(f, &f.english)?;
    let ga = descriptor_concepts(f, &f.irish)?;
    for (a, b, expected) in [("Jupiter", "Iúpatar", 0.3), ("Apple", "Úll", 0.0)] {
        let d = concept_distance(find(&en, a)?, find(&ga, b)?, &f.schema)?.total;
        rows.within(format!("d({a}, {b})"), expected, DISTANCE_TOLERANCE, d);
    }
    for (irish, english) in TRANSLATIONS {
        let ranked = translate_noun(find(&ga, irish)?, &en, &f.schema)?;
        let best = &ranked[0];
        let computed = if best.tied {
            format!("{} (tied)", best.name)
        } else {
            best.name.clone()
        };
        rows.exact(format!("translation of {irish}"), english, computed);
    }
    Ok(())
}

fn metric(f: &Fixtures) -> Vec<Row> {
    let mut rows = Rows::new(Suite::Metric);
    if let Err(e) = metric_rows(&mut rows, f) {
        rows.failed("concept metric", "computed", &e);
    }
    rows.rows
}

/// Printed distances that the definition does not reproduce.
pub const PRINTED_DISTANCES: [(&str, &str, f64); 9] = [
    ("Apple", "Jupiter", 8.7),
    ("Mars", "Jupiter", 5.55),
    ("Jupiter", "Sun", 7.7),
    ("Apple", "Sun", 7.97),
    ("Apple", "Grian", 7.97),
    ("Venus", "Iúpatar", 8.75),
    ("Mars", "Iúpatar", 5.45),
    ("Apple", "Iúpatar", 8.6),
    ("Sun", "Iúpatar", 7.6),
];

fn diagnostic_distances(rows: &mut Rows, f: &Fixtures) -> Result<()> {
    let en = descriptor_concepts(f, &f.english)?;
    let ga = descriptor_concepts(f, &f.irish)?;
    let lookup = |name: &str| find(&en, name).or_else(|_| find(&ga, name));
    for (a, b, printed) in PRINTED_DISTANCES {
        let d = concept_distance(lookup(a)?, lookup(b)?, &f.schema)?.total;
        rows.push(
            format!("printed d({a}, {b})"),
            format!("{printed}"),
            format!("{d:.4} (Δ {:+.4})", d - printed),
            (d - printed).abs() <= 0.005,
        );
    }
    Ok(())
}

fn diagnostic_corpus_similarity(rows: &mut Rows, f: &Fixtures) -> Result<()> {
    let model_for = |data: &LanguageData| -> Result<_> {
        let text = f.source.corpus("star_wars", data.language)?;
        let doc = tokenize_corpus(&text, data);
        build_model(&doc, data, data.model.basis.clone(), WINDOW_RADIUS)
    };
    let (en_model, ga_model) = (model_for(&f.english)?, model_for(&f.irish)?);
    for (en, ga, printed) in SIMILARITY_TABLE {
        let label = format!("corpus-derived {en} / {ga}");
        let meanings = evaluate_sentence_in(en, &f.english, &en_model)
            .and_then(|a| Ok((a.meaning, evaluate_sentence_in(ga, &f.irish, &ga_model)?.meaning)));
        match meanings {
            Ok((a, b)) if a.is_zero() || b.is_zero() => {
                let side = if a.is_zero() { "English" } else { "Irish" };
                rows.push(label, format!("{printed}"), format!("0 (zero {side} meaning)"), false);
            }
            Ok((a, b)) => rows.printed(label, printed, 2, compare(&a, &b).score),
            Err(e) => rows.failed(label, printed, &e),
        }
    }
    Ok(())
}

fn diagnostic_corpus_concepts(rows: &mut Rows, f: &Fixtures) -> Result<()> {
    for data in [&f.english, &f.irish] {
        let text = f.source.corpus("planets", data.language)?;
        let doc = tokenize_corpus(&text, data);
        let from_table = descriptor_concepts(f, data)?;
        let builder = ConceptBuilder::new(&f.schema, &data.adjectives, &data.tree).with_lemmas(data.text.lemmas());
        for (name, expected) in &from_table {
            let found: Descriptors = extract_descriptors(&doc, name, &data.adjectives, &data.tree, &data.text.negators);
            let built = builder.build(&found)?.concept;
            let same = &built == expected;
            let computed = if same {
                "same".to_string()
            } else {
                format!(
                    "{} | {}",
                    describe_regions(&built),
                    describe_nodes(&built.tree_set().nodes)
                )
            };
            rows.push(
                format!("corpus-derived concept {name}"),
                "as from the descriptor table".into(),
                computed,
                same,
            );
        }
    }
    Ok(())
}

fn diagnostics(f: &Fixtures) -> Vec<Row> {
    let mut rows = Rows::new(Suite::Diagnostics);
    if let Err(e) = diagnostic_distances(&mut rows, f) {
        rows.failed("printed distances", "computed", &e);
    }
    for (reference, candidate, irish, printed, _) in BLEU_TABLE {
        let data = if irish { &f.irish } else { &f.english };
        let label = format!("similarity {reference} / {candidate}");
        match pair(reference, data, candidate, data) {
            Ok(s) => rows.printed(label, printed, 2, s.score),
            Err(e) => rows.failed(label, printed, &e),
        }
    }
    for (reference, candidate, irish, _, printed) in BLEU_TABLE {
        let label = format!("method7 (current reference) {reference} / {candidate}");
        match bleu_row(f, reference, candidate, irish, Smoothing::Method7) {
            Ok(score) => rows.within(label, printed, BLEU_BAND, score),
            Err(e) => rows.failed(label, printed, &e),
        }
    }
    match pair(MASTERMIND, &f.english, &mastermind_variant("Mace Windu"), &f.english) {
        Ok(s) => rows.exact("printed length of the Mace Windu variant", 41066496, s.length_b),
        Err(e) => rows.failed("Mace Windu variant lengths", 41066496, &e),
    }
    if let Err(e) = diagnostic_corpus_similarity(&mut rows, f) {
        rows.failed("corpus-derived similarity", "computed", &e);
    }
    if let Err(e) = diagnostic_corpus_concepts(&mut rows, f) {
        rows.failed("corpus-derived concepts", "computed", &e);
    }
    rows.rows
}

/// Rows of one suite.
pub fn run_suite(f: &Fixtures, suite: Suite) -> Vec<Row> {
    match suite {
        Suite::Contraction => contraction(f),
        Suite::Crosslingual => crosslingual(f),
        Suite::Similarity => similarity(f),
        Suite::RelativeClause => relative_clause(f),
        Suite::Bleu => bleu_suite(f),
        Suite::Concepts => concepts(f),
        Suite::Metric => metric(f),
        Suite::Diagnostics => diagnostics(f),
    }
}

/// Runs `suites` (all when empty).
pub fn reproduce(f: &Fixtures, suites: &[Suite]) -> Report {
    let chosen: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites.to_vec()
    };
    let rows = Suite::ALL
        .into_iter()
        .filter(|s| chosen.contains(s))
        .flat_map(|s| run_suite(f, s))
        .collect();
    Report {
        rows,
        notes: vec![
            "printed decimals match by truncation or half-up rounding".into(),
            format!(
                "BLEU table: smoothing {}, tokens lowercased with person names merged",
                Smoothing::Method7Nltk32.name()
            ),
            format!("corpus-derived models: window radius {WINDOW_RADIUS}"),
        ],
    }
}
