//! The bundled English and Irish data sets.
//!
//! Every language has six files, named by language code:
//!
//! | file | contents |
//! |---|---|
//! | `lexicon.<lang>.toml` | pregroup lexicon |
//! | `model.<lang>.toml` | distributional model |
//! | `text.<lang>.toml` | multiwords, lemmas, particles, negators |
//! | `adjectives.<lang>.txt` | adjective values |
//! | `tree.<lang>.txt` | hypernym tree |
//! | `descriptors.<lang>.toml` | concept descriptors |
//!
//! plus corpora under `corpora/<name>.<lang>.txt`. The files are compiled
//! into the binary. A directory given with [`FixtureSource::dir`] (or the
//! `DISCOTRANS_FIXTURES` environment variable) overrides them file by file:
//! files it lacks fall back to the bundled copies.

use std::path::{Path, PathBuf};

use discotrans_core::concepts::{AdjectiveValueTable, HypernymTree, PropertySchema};
use discotrans_core::distrib::DistribModel;
use discotrans_core::grammar::Lexicon;
use discotrans_core::Language;

use crate::error::{Error, Result};
use crate::formats::adjectives::parse_adjectives;
use crate::formats::descriptors::{parse_descriptors, DescriptorTable};
use crate::formats::lexicon::parse_lexicon;
use crate::formats::model::parse_model;
use crate::formats::text::{parse_text_tables, TextTables};
use crate::formats::tree::{check_aligned, parse_tree};

/// Environment variable naming an override directory.
pub const FIXTURES_ENV: &str = "DISCOTRANS_FIXTURES";

/// Names of the bundled corpora.
pub const CORPORA: [&str; 2] = ["star_wars", "planets"];

const BUNDLED: &[(&str, &str)] = &[
    ("lexicon.en.toml", include_str!("../data/lexicon.en.toml")),
    ("lexicon.ga.toml", include_str!("../data/lexicon.ga.toml")),
    ("model.en.toml", include_str!("../data/model.en.toml")),
    ("model.ga.toml", include_str!("../data/model.ga.toml")),
    ("text.en.toml", include_str!("../data/text.en.toml")),
    ("text.ga.toml", include_str!("../data/text.ga.toml")),
    ("adjectives.en.txt", include_str!("../data/adjectives.en.txt")),
    ("adjectives.ga.txt", include_str!("../data/adjectives.ga.txt")),
    ("tree.en.txt", include_str!("../data/tree.en.txt")),
    ("tree.ga.txt", include_str!("../data/tree.ga.txt")),
    ("descriptors.en.toml", include_str!("../data/descriptors.en.toml")),
    ("descriptors.ga.toml", include_str!("../data/descriptors.ga.toml")),
    (
        "corpora/star_wars.en.txt",
        include_str!("../data/corpora/star_wars.en.txt"),
    ),
    (
        "corpora/star_wars.ga.txt",
        include_str!("../data/corpora/star_wars.ga.txt"),
    ),
    ("corpora/planets.en.txt", include_str!("../data/corpora/planets.en.txt")),
    ("corpora/planets.ga.txt", include_str!("../data/corpora/planets.ga.txt")),
];

/// Where fixture files are read from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FixtureSource {
    dir: Option<PathBuf>,
}

impl FixtureSource {
    /// Only the bundled files.
    pub fn bundled() -> Self {
        FixtureSource { dir: None }
    }

    /// `dir` first, then the bundled files.
    pub fn dir(dir: impl Into<PathBuf>) -> Self {
        FixtureSource { dir: Some(dir.into()) }
    }

    /// The directory named by [`FIXTURES_ENV`], if set.
    pub fn from_env() -> Self {
        match std::env::var_os(FIXTURES_ENV) {
            Some(d) if !d.is_empty() => FixtureSource::dir(d),
            _ => FixtureSource::bundled(),
        }
    }

    /// Text of the file `name` (relative path such as `model.en.toml`).
    pub fn read(&self, name: &str) -> Result<String> {
        if let Some(dir) = &self.dir {
            let path = dir.join(name);
            if path.exists() {
                return read_file(&path);
            }
        }
        BUNDLED
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, text)| (*text).to_string())
            .ok_or_else(|| Error::Unknown {
                kind: "fixture file",
                name: name.to_string(),
            })
    }

    /// Text of corpus `name` in `language`.
    pub fn corpus(&self, name: &str, language: Language) -> Result<String> {
        self.read(&format!("corpora/{name}.{}.txt", language.code()))
    }
}

/// Reads a UTF-8 file.
pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Everything loaded for one language.
#[derive(Debug, Clone)]
pub struct LanguageData {
    /// The language.
    pub language: Language,
    /// Pregroup lexicon.
    pub lexicon: Lexicon,
    /// Distributional model.
    pub model: DistribModel,
    /// Preprocessing tables.
    pub text: TextTables,
    /// Adjective values.
    pub adjectives: AdjectiveValueTable,
    /// Hypernym tree.
    pub tree: HypernymTree,
    /// Concept descriptors.
    pub descriptors: DescriptorTable,
}

fn expect_language(found: Language, wanted: Language, file: &str) -> Result<()> {
    if found == wanted {
        Ok(())
    } else {
        Err(Error::format(
            file,
            format!("declares language `{}`, expected `{}`", found.code(), wanted.code()),
        ))
    }
}

impl LanguageData {
    /// Loads the six files of `language` from `source`.
    pub fn load(source: &FixtureSource, language: Language, schema: &PropertySchema) -> Result<Self> {
        let code = language.code();
        let name = |stem: &str, ext: &str| format!("{stem}.{code}.{ext}");
        let file = name("lexicon", "toml");
        let lexicon = parse_lexicon(&source.read(&file)?, &file)?;
        if let Some(e) = lexicon.entries().iter().find(|e| e.language != language) {
            return Err(Error::format(
                &file,
                format!("entry `{}` is not in `{code}`", e.surface),
            ));
        }
        let file = name("model", "toml");
        let model = parse_model(&source.read(&file)?, &file)?;
        expect_language(model.language, language, &file)?;
        let file = name("text", "toml");
        let text = parse_text_tables(&source.read(&file)?, &file)?;
        expect_language(text.language, language, &file)?;
        let file = name("adjectives", "txt");
        let adjectives = parse_adjectives(&source.read(&file)?, &file, language, schema)?;
        let file = name("tree", "txt");
        let tree = parse_tree(&source.read(&file)?, &file)?;
        let file = name("descriptors", "toml");
        let descriptors = parse_descriptors(&source.read(&file)?, &file)?;
        expect_language(descriptors.language, language, &file)?;
        Ok(LanguageData {
            language,
            lexicon,
            model,
            text,
            adjectives,
            tree,
            descriptors,
        })
    }
}

/// Both languages, the property schema and where they came from.
#[derive(Debug, Clone)]
pub struct Fixtures {
    /// File source, also used for corpora.
    pub source: FixtureSource,
    /// The property schema shared by both languages.
    pub schema: PropertySchema,
    /// English data.
    pub english: LanguageData,
    /// Irish data.
    pub irish: LanguageData,
}

impl Fixtures {
    /// Loads both languages and checks that their trees align.
    pub fn load(source: FixtureSource) -> Result<Self> {
        let schema = PropertySchema::standard();
        let english = LanguageData::load(&source, Language::English, &schema)?;
        let irish = LanguageData::load(&source, Language::Irish, &schema)?;
        check_aligned(&english.tree, &irish.tree, ("tree.en.txt", "tree.ga.txt"))?;
        Ok(Fixtures {
            source,
            schema,
            english,
            irish,
        })
    }

    /// The bundled data.
    pub fn bundled() -> Result<Self> {
        Fixtures::load(FixtureSource::bundled())
    }

    /// The data of `language`.
    pub fn language(&self, language: Language) -> &LanguageData {
        match language {
            Language::English => &self.english,
            Language::Irish => &self.irish,
        }
    }
}
