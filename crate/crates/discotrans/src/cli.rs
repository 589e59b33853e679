//! The `discotrans` command line.
//!
//! Every subcommand reads the bundled fixtures (or a directory given with
//! `--fixtures` or `DISCOTRANS_FIXTURES`) and prints one report on
//! standard output, as JSON or plain text. Exit codes: 0 on success, 1 on a
//! domain outcome such as a rejected sentence or a failed regression, 2 on
//! bad usage or unreadable input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use discotrans_core::bleu::{bleu, tokens, BleuReport, Smoothing};
use discotrans_core::concepts::{extract_descriptors, Concept, ConceptBuilder};
use discotrans_core::distrib::{compare, DistribModel};
use discotrans_core::grammar::GrammarError;
use discotrans_core::metric::{concept_distance, translate_noun, DistanceReport, RankedCandidate};
use discotrans_core::numeric::Rational;
use discotrans_core::Language;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fixtures::{read_file, FixtureSource, Fixtures, LanguageData, CORPORA};
use crate::formats::concept_json::{read_concept, write_concept, NamedConcept};
use crate::formats::lexicon::parse_lexicon;
use crate::formats::model::{parse_model, write_model};
use crate::pipeline::{build_model, check_sentence, evaluate_sentence_in, tokenize_corpus, WINDOW_RADIUS};
use crate::reproduce::{descriptor_concepts, reproduce, Suite};

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for a domain outcome: rejected sentence, missing word, failed
/// regression.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit code for bad usage or unreadable input.
pub const EXIT_USAGE: i32 = 2;

/// Cross-lingual sentence and noun translation checks.
#[derive(Debug, Parser)]
#[command(name = "discotrans", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Directory overriding the bundled fixture files.
    #[arg(long, global = true, value_name = "DIR")]
    pub fixtures: Option<PathBuf>,
    /// What to run.
    #[command(subcommand)]
    pub command: Command,
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Pretty-printed JSON.
    Json,
    /// Plain text.
    Text,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grammar checks.
    #[command(subcommand)]
    Grammar(GrammarCommand),
    /// Distributional models.
    #[command(subcommand)]
    Model(ModelCommand),
    /// Sentence meanings.
    #[command(subcommand)]
    Sentence(SentenceCommand),
    /// Sentence-level BLEU of a candidate against a reference.
    Bleu(BleuArgs),
    /// Noun concepts.
    #[command(subcommand)]
    Concept(ConceptCommand),
    /// Runs the regression suites and prints a pass/fail table.
    Reproduce(ReproduceArgs),
}

/// `grammar` subcommands.
#[derive(Debug, Subcommand)]
pub enum GrammarCommand {
    /// Types a sentence and reduces it to `s`.
    Check {
        /// Language code (`en` or `ga`).
        #[arg(long)]
        lang: Language,
        /// Lexicon file replacing the fixture lexicon.
        #[arg(long)]
        lexicon: Option<PathBuf>,
        /// The sentence.
        sentence: String,
    },
}

/// `model` subcommands.
#[derive(Debug, Subcommand)]
pub enum ModelCommand {
    /// Counts a corpus into a model file.
    Build {
        /// Bundled corpus name or a file path.
        #[arg(long)]
        corpus: String,
        /// Language code.
        #[arg(long)]
        lang: Language,
        /// Comma-separated basis words; defaults to the fixture model basis.
        #[arg(long, value_delimiter = ',')]
        basis: Option<Vec<String>>,
        /// Co-occurrence window radius.
        #[arg(long, default_value_t = WINDOW_RADIUS)]
        window: usize,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// `sentence` subcommands.
#[derive(Debug, Subcommand)]
pub enum SentenceCommand {
    /// Evaluates two sentences and prints their similarity.
    Compare {
        /// Model file for the first sentence; its language picks the lexicon.
        #[arg(long)]
        model_a: Option<PathBuf>,
        /// Model file for the second sentence.
        #[arg(long)]
        model_b: Option<PathBuf>,
        /// Language of the first sentence when no model file is given.
        #[arg(long, default_value = "en")]
        lang_a: Language,
        /// Language of the second sentence when no model file is given.
        #[arg(long, default_value = "ga")]
        lang_b: Language,
        /// First sentence.
        a: String,
        /// Second sentence.
        b: String,
    },
}

/// Arguments of `bleu`.
#[derive(Debug, Args)]
pub struct BleuArgs {
    /// Reference sentence.
    #[arg(long = "ref")]
    pub reference: String,
    /// Candidate sentence.
    #[arg(long = "cand")]
    pub candidate: String,
    /// Smoothing: `method7-nltk32`, `method7` or `none`.
    #[arg(long, default_value = "method7-nltk32")]
    pub smoothing: Smoothing,
    /// Language whose person names are merged into single tokens.
    #[arg(long, default_value = "en")]
    pub lang: Language,
}

/// `concept` subcommands.
#[derive(Debug, Subcommand)]
pub enum ConceptCommand {
    /// Builds the concept of a noun and prints it as JSON.
    Build {
        /// Language code.
        #[arg(long)]
        lang: Language,
        /// The noun.
        #[arg(long)]
        noun: String,
        /// Bundled corpus name or file to extract descriptors from; the
        /// fixture descriptor table is used when absent.
        #[arg(long)]
        corpus: Option<String>,
        /// Adjective table replacing the fixture table.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Tree file replacing the fixture tree.
        #[arg(long)]
        tree: Option<PathBuf>,
    },
    /// Distance between two concepts, each `lang:Noun` or a concept file.
    Distance {
        /// First concept.
        #[arg(long)]
        a: String,
        /// Second concept.
        #[arg(long)]
        b: String,
    },
    /// Ranks candidate concepts by distance to a query concept.
    Translate {
        /// Query concept, `lang:Noun` or a concept file.
        #[arg(long)]
        query: String,
        /// Directory of concept files to rank.
        #[arg(long, conflicts_with = "to")]
        candidates: Option<PathBuf>,
        /// Rank the fixture concepts of this language.
        #[arg(long)]
        to: Option<Language>,
    },
}

/// Arguments of `reproduce`.
#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Suites to run; all when absent.
    #[arg(long = "suite")]
    pub suites: Vec<Suite>,
}

/// What a command prints and how it exits.
struct Outcome {
    json: String,
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Outcome {
            json: to_json(&json),
            text,
            code: EXIT_OK,
        }
    }

    /// A JSON document printed as is in both formats.
    fn document(doc: String) -> Self {
        Outcome {
            json: doc.clone(),
            text: doc,
            code: EXIT_OK,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Reports go to standard output, errors to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut stdout = std::io::stdout().lock();
    match execute(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => out.json,
                Format::Text => out.text,
            };
            if stdout.write_all(body.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_input_error() {
                EXIT_USAGE
            } else {
                EXIT_DOMAIN
            }
        }
    }
}

fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).unwrap_or_default();
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let source = match &cli.fixtures {
        Some(dir) => FixtureSource::dir(dir),
        None => FixtureSource::from_env(),
    };
    let fixtures = Fixtures::load(source)?;
    match &cli.command {
        Command::Grammar(GrammarCommand::Check {
            lang,
            lexicon,
            sentence,
        }) => grammar_check(&fixtures, *lang, lexicon.as_deref(), sentence),
        Command::Model(ModelCommand::Build {
            corpus,
            lang,
            basis,
            window,
            out,
        }) => model_build(&fixtures, corpus, *lang, basis.clone(), *window, out.as_deref()),
        Command::Sentence(SentenceCommand::Compare {
            model_a,
            model_b,
            lang_a,
            lang_b,
            a,
            b,
        }) => {
            let left = model_or_fixture(&fixtures, model_a.as_deref(), *lang_a)?;
            let right = model_or_fixture(&fixtures, model_b.as_deref(), *lang_b)?;
            sentence_compare(&fixtures, (a, &left), (b, &right))
        }
        Command::Bleu(args) => bleu_command(&fixtures, args),
        Command::Concept(ConceptCommand::Build {
            lang,
            noun,
            corpus,
            table,
            tree,
        }) => concept_build(
            &fixtures,
            *lang,
            noun,
            corpus.as_deref(),
            table.as_deref(),
            tree.as_deref(),
        ),
        Command::Concept(ConceptCommand::Distance { a, b }) => {
            let a = resolve_concept(&fixtures, a)?;
            let b = resolve_concept(&fixtures, b)?;
            let report = concept_distance(&a.concept, &b.concept, &fixtures.schema)?;
            Ok(distance_outcome(&a, &b, &report))
        }
        Command::Concept(ConceptCommand::Translate { query, candidates, to }) => {
            let query = resolve_concept(&fixtures, query)?;
            let pool = match (candidates, to) {
                (Some(dir), _) => concepts_in_dir(&fixtures, dir)?,
                (None, Some(lang)) => fixture_concepts(&fixtures, *lang)?,
                (None, None) => fixture_concepts(&fixtures, other_language(query.language))?,
            };
            let ranked = translate_noun(&query.concept, &pool, &fixtures.schema)?;
            Ok(translate_outcome(&query, &ranked))
        }
        Command::Reproduce(args) => {
            let report = reproduce(&fixtures, &args.suites);
            let code = if report.passed() { EXIT_OK } else { EXIT_DOMAIN };
            Ok(Outcome {
                json: to_json(&serde_json::to_value(&report)?),
                text: report.to_text(),
                code,
            })
        }
    }
}

fn other_language(lang: Language) -> Language {
    match lang {
        Language::English => Language::Irish,
        Language::Irish => Language::English,
    }
}

/// An exact number: a JSON integer when whole, else the string `p/q`.
fn rational(r: Rational) -> Value {
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        json!(r.to_string())
    }
}

fn grammar_check(f: &Fixtures, lang: Language, lexicon: Option<&Path>, sentence: &str) -> Result<Outcome> {
    let mut data = f.language(lang).clone();
    if let Some(path) = lexicon {
        data.lexicon = parse_lexicon(&read_file(path)?, &path.display().to_string())?;
    }
    match check_sentence(sentence, &data) {
        Ok(checked) => {
            let parse = &checked.parse;
            let tokens: Vec<Value> = checked
                .units
                .iter()
                .zip(&parse.tokens)
                .map(|(u, t)| json!({"unit": u.display(), "category": t.entry.category.name(), "type": t.ptype().to_string()}))
                .collect();
            let wires = parse.plan.wires();
            let wire = |i: usize| format!("{}:{}", parse.tokens[wires[i].token].surface, wires[i].simple);
            let pairings: Vec<Value> = parse
                .plan
                .pairings()
                .iter()
                .map(|p| json!([wire(p.left), wire(p.right)]))
                .collect();
            let mut text = String::from("ACCEPT\n");
            for (u, t) in checked.units.iter().zip(&parse.tokens) {
                let _ = writeln!(text, "  {}: {}", u.display(), t.ptype());
            }
            for p in parse.plan.pairings() {
                let _ = writeln!(text, "  {} ~ {}", wire(p.left), wire(p.right));
            }
            Ok(Outcome::ok(
                json!({"verdict": "ACCEPT", "tokens": tokens, "pairings": pairings, "result": parse.plan.result_type().to_string()}),
                text,
            ))
        }
        Err(Error::Grammar(GrammarError::NotASentence { residual })) => Ok(Outcome {
            json: to_json(&json!({"verdict": "REJECT", "residual": residual.to_string()})),
            text: format!("REJECT\n  residual: {residual}\n"),
            code: EXIT_DOMAIN,
        }),
        Err(e) => Err(e),
    }
}

/// Reads a bundled corpus by name, or a corpus file.
fn corpus_text(f: &Fixtures, corpus: &str, lang: Language) -> Result<String> {
    if CORPORA.contains(&corpus) {
        f.source.corpus(corpus, lang)
    } else {
        read_file(Path::new(corpus))
    }
}

fn model_build(
    f: &Fixtures,
    corpus: &str,
    lang: Language,
    basis: Option<Vec<String>>,
    window: usize,
    out: Option<&Path>,
) -> Result<Outcome> {
    let data = f.language(lang);
    let doc = tokenize_corpus(&corpus_text(f, corpus, lang)?, data);
    let basis = basis.unwrap_or_else(|| data.model.basis.clone());
    let model = build_model(&doc, data, basis, window)?;
    let written = write_model(&model);
    let summary = json!({
        "language": lang.code(),
        "basis": model.basis,
        "window": window,
        "nouns": model.nouns.len(),
        "verbs": model.verbs.len(),
        "adjectives": model.adjectives.len(),
        "pp": model.pp_heads.len(),
        "out": out.map(|p| p.display().to_string()),
    });
    match out {
        Some(path) => {
            std::fs::write(path, &written).map_err(|source| Error::Io {
                path: path.to_path_buf(),
                source,
            })?;
            let text = format!(
                "wrote {} ({} nouns, {} verbs)\n",
                path.display(),
                model.nouns.len(),
                model.verbs.len()
            );
            Ok(Outcome::ok(summary, text))
        }
        None => Ok(Outcome::ok(json!({"model": written}), written)),
    }
}

fn model_or_fixture(f: &Fixtures, path: Option<&Path>, lang: Language) -> Result<DistribModel> {
    match path {
        Some(p) => parse_model(&read_file(p)?, &p.display().to_string()),
        None => Ok(f.language(lang).model.clone()),
    }
}

fn sentence_compare(f: &Fixtures, a: (&str, &DistribModel), b: (&str, &DistribModel)) -> Result<Outcome> {
    let evaluate = |(s, m): (&str, &DistribModel)| -> Result<_> {
        let data: &LanguageData = f.language(m.language);
        evaluate_sentence_in(s, data, m)
    };
    let left = evaluate(a)?;
    let right = evaluate(b)?;
    let s = compare(&left.meaning, &right.meaning);
    let json = json!({
        "a": {"sentence": a.0, "language": a.1.language.code(), "meaning": left.meaning.to_string()},
        "b": {"sentence": b.0, "language": b.1.language.code(), "meaning": right.meaning.to_string()},
        "inner": rational(s.inner),
        "lenA": rational(s.length_a),
        "lenB": rational(s.length_b),
        "score": s.score,
    });
    let text = format!(
        "A: {}\nB: {}\ninner {}, lengths {} and {}, score {:.4}\n",
        left.meaning, right.meaning, s.inner, s.length_a, s.length_b, s.score
    );
    Ok(Outcome::ok(json, text))
}

fn bleu_command(f: &Fixtures, args: &BleuArgs) -> Result<Outcome> {
    let names = f.language(args.lang).text.names();
    let r = tokens(&args.reference, &names);
    let c = tokens(&args.candidate, &names);
    let report: BleuReport = bleu(&r, &c, args.smoothing)?;
    let json = json!({
        "reference": r,
        "candidate": c,
        "smoothing": report.smoothing.name(),
        "precisions": report.precisions.iter().map(|p| json!({"matched": p.matched, "total": p.total})).collect::<Vec<_>>(),
        "smoothed": report.smoothed,
        "brevity_penalty": report.brevity_penalty,
        "score": report.score,
    });
    let text = format!("BLEU ({}) = {:.4}\n", report.smoothing.name(), report.score);
    Ok(Outcome::ok(json, text))
}

fn concept_build(
    f: &Fixtures,
    lang: Language,
    noun: &str,
    corpus: Option<&str>,
    table: Option<&Path>,
    tree: Option<&Path>,
) -> Result<Outcome> {
    let mut data = f.language(lang).clone();
    if let Some(path) = table {
        data.adjectives = crate::formats::adjectives::parse_adjectives(
            &read_file(path)?,
            &path.display().to_string(),
            lang,
            &f.schema,
        )?;
    }
    if let Some(path) = tree {
        data.tree = crate::formats::tree::parse_tree(&read_file(path)?, &path.display().to_string())?;
    }
    let (name, descriptors) = match corpus {
        Some(c) => {
            let doc = tokenize_corpus(&corpus_text(f, c, lang)?, &data);
            let found = extract_descriptors(&doc, noun, &data.adjectives, &data.tree, &data.text.negators);
            (noun.to_string(), found)
        }
        None => {
            let (name, d) = data
                .descriptors
                .nouns
                .iter()
                .find(|(n, _)| n.to_lowercase() == noun.to_lowercase())
                .ok_or_else(|| Error::Unknown {
                    kind: "noun",
                    name: noun.into(),
                })?;
            (name.clone(), d.clone())
        }
    };
    let built = ConceptBuilder::new(&f.schema, &data.adjectives, &data.tree)
        .with_lemmas(data.text.lemmas())
        .build(&descriptors)?;
    let named = NamedConcept {
        name,
        language: lang,
        concept: built.concept,
    };
    // Dropped descriptors go to standard error so the output stays a
    // readable concept file.
    for a in &built.dropped_adjectives {
        eprintln!("note: adjective `{a}` is not in the table");
    }
    for n in &built.unresolved_nouns {
        eprintln!("note: noun `{n}` is not in the tree");
    }
    Ok(Outcome::document(write_concept(&named)?))
}

/// The fixture concepts of `lang`, built from its descriptor table.
fn fixture_concepts(f: &Fixtures, lang: Language) -> Result<Vec<(String, Concept)>> {
    descriptor_concepts(f, f.language(lang))
}

/// A concept named `lang:Noun` (from the fixtures) or a concept file.
fn resolve_concept(f: &Fixtures, reference: &str) -> Result<NamedConcept> {
    if let Some((code, noun)) = reference.split_once(':') {
        if let Ok(lang) = code.parse::<Language>() {
            let (name, concept) = fixture_concepts(f, lang)?
                .into_iter()
                .find(|(n, _)| n.to_lowercase() == noun.to_lowercase())
                .ok_or_else(|| Error::Unknown {
                    kind: "noun",
                    name: reference.into(),
                })?;
            return Ok(NamedConcept {
                name,
                language: lang,
                concept,
            });
        }
    }
    let path = Path::new(reference);
    read_concept(&read_file(path)?, reference, &f.schema, &f.english.tree)
}

/// Every `*.json` concept file in `dir`, in file-name order.
fn concepts_in_dir(f: &Fixtures, dir: &Path) -> Result<Vec<(String, Concept)>> {
    let io = |source| Error::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()).map_err(io))
        .collect::<Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "json"));
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let c = read_concept(&read_file(p)?, &p.display().to_string(), &f.schema, &f.english.tree)?;
            Ok((c.name, c.concept))
        })
        .collect()
}

fn distance_outcome(a: &NamedConcept, b: &NamedConcept, report: &DistanceReport) -> Outcome {
    let json = json!({
        "a": a.name,
        "b": b.name,
        "properties": report.properties.iter().map(|p| json!({"property": p.property, "distance": p.distance})).collect::<Vec<_>>(),
        "tree_distance": report.tree_distance,
        "total": report.total,
    });
    let mut text = String::new();
    for p in &report.properties {
        let _ = writeln!(text, "{:<12} {:.4}", p.property, p.distance);
    }
    let _ = writeln!(text, "{:<12} {}", "tree", report.tree_distance);
    let _ = writeln!(text, "d({}, {}) = {:.4}", a.name, b.name, report.total);
    Outcome::ok(json, text)
}

fn translate_outcome(query: &NamedConcept, ranked: &[RankedCandidate]) -> Outcome {
    let json = json!({
        "query": query.name,
        "ranking": ranked.iter().map(|r| json!({"name": r.name, "distance": r.distance, "tied": r.tied})).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for (i, r) in ranked.iter().enumerate() {
        let tie = if r.tied { " (tied)" } else { "" };
        let _ = writeln!(text, "{}. {} {:.4}{tie}", i + 1, r.name, r.distance);
    }
    Outcome::ok(json, text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_parse() {
        let cli = Cli::try_parse_from([
            "discotrans",
            "--format",
            "text",
            "bleu",
            "--ref",
            "a b",
            "--cand",
            "a c",
        ])
        .unwrap();
        assert_eq!(cli.format, Format::Text);
        match cli.command {
            Command::Bleu(args) => assert_eq!(args.smoothing, Smoothing::Method7Nltk32),
            other => panic!("{other:?}"),
        }
        let cli = Cli::try_parse_from(["discotrans", "reproduce", "--suite", "bleu", "--suite", "metric"]).unwrap();
        match cli.command {
            Command::Reproduce(args) => assert_eq!(args.suites, vec![Suite::Bleu, Suite::Metric]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn usage_errors_exit_with_two() {
        assert_eq!(run(["discotrans", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["discotrans", "grammar", "check", "--lang", "fr", "x"]), EXIT_USAGE);
    }

    #[test]
    fn rationals_print_exactly() {
        assert_eq!(rational(Rational::from_integer(10174)), json!(10174));
        assert_eq!(rational(Rational::new(1, 3)), json!("1/3"));
    }
}
