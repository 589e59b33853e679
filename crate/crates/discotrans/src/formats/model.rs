//! TOML distributional models.
//!
//! ```toml
//! language = "en"
//! basis = ["Anakin", "Palpatine", "arg-evil"]
//!
//! [nouns]
//! "Anakin" = [1, 0, 0]
//!
//! [adjectives]
//! "evil" = [2, "1/2", 3]
//!
//! [pp]
//! "to the dark side" = [3, 0, 1]
//!
//! [verbs.turn]
//! orientation = "subject-object"
//! rows = [[8, 7, 4], [1, 0, 0], [4, 2, 1]]
//! ```
//!
//! Entries are non-negative integers or exact fractions `"p/q"`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use discotrans_core::distrib::{DistribModel, NounVector, Orientation, VerbMatrix, WordMap};
use discotrans_core::numeric::Rational;
use serde::Deserialize;

use super::{parse_language, parse_toml};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    language: String,
    basis: Vec<String>,
    #[serde(default)]
    nouns: BTreeMap<String, Vec<Entry>>,
    #[serde(default)]
    adjectives: BTreeMap<String, Vec<Entry>>,
    #[serde(default)]
    pp: BTreeMap<String, Vec<Entry>>,
    #[serde(default)]
    verbs: BTreeMap<String, VerbRecord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VerbRecord {
    orientation: String,
    rows: Vec<Vec<Entry>>,
}

fn rational(entry: &Entry, name: &str, word: &str) -> Result<Rational> {
    let bad = |what: &str| Error::format(name, format!("`{word}`: {what}"));
    match entry {
        Entry::Int(i) => Ok(Rational::from_integer(*i)),
        Entry::Text(s) => {
            let (p, q) = s.split_once('/').ok_or_else(|| bad(&format!("`{s}` is not p/q")))?;
            let p: i64 = p.trim().parse().map_err(|_| bad(&format!("bad numerator in `{s}`")))?;
            let q: i64 = q
                .trim()
                .parse()
                .map_err(|_| bad(&format!("bad denominator in `{s}`")))?;
            if q == 0 {
                return Err(bad("zero denominator"));
            }
            Ok(Rational::new(p, q))
        }
    }
}

fn vectors(table: BTreeMap<String, Vec<Entry>>, name: &str) -> Result<WordMap<NounVector>> {
    let mut map = WordMap::new();
    for (word, entries) in table {
        let coords = entries
            .iter()
            .map(|e| rational(e, name, &word))
            .collect::<Result<Vec<_>>>()?;
        let v = NounVector::new(coords).map_err(|e| Error::format(name, format!("`{word}`: {e}")))?;
        map.insert(word, v);
    }
    Ok(map)
}

/// Parses a model file; `name` labels errors.
pub fn parse_model(source: &str, name: &str) -> Result<DistribModel> {
    let file: ModelFile = parse_toml(source, name)?;
    let mut model = DistribModel::new(parse_language(&file.language, name)?, file.basis);
    model.nouns = vectors(file.nouns, name)?;
    model.adjectives = vectors(file.adjectives, name)?;
    model.pp_heads = vectors(file.pp, name)?;
    for (verb, record) in file.verbs {
        let orientation: Orientation = record
            .orientation
            .parse()
            .map_err(|e| Error::format(name, format!("verb `{verb}`: {e}")))?;
        let rows = record
            .rows
            .iter()
            .map(|r| r.iter().map(|e| rational(e, name, &verb)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        let m = VerbMatrix::new(rows, orientation).map_err(|e| Error::format(name, format!("verb `{verb}`: {e}")))?;
        model.verbs.insert(verb, m);
    }
    model.validate().map_err(|e| Error::format(name, e.to_string()))?;
    Ok(model)
}

fn entry(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("\"{}/{}\"", r.numer(), r.denom())
    }
}

fn row(coords: &[Rational]) -> String {
    let items: Vec<String> = coords.iter().map(entry).collect();
    format!("[{}]", items.join(", "))
}

fn key(word: &str) -> String {
    toml::Value::String(word.to_string()).to_string()
}

fn write_vectors(out: &mut String, header: &str, map: &WordMap<NounVector>) {
    if map.iter().next().is_none() {
        return;
    }
    let _ = writeln!(out, "\n[{header}]");
    for (word, v) in map.iter() {
        let _ = writeln!(out, "{} = {}", key(word), row(v.coords()));
    }
}

/// Writes `model` in the format read by [`parse_model`].
pub fn write_model(model: &DistribModel) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "language = \"{}\"", model.language.code());
    let basis: Vec<String> = model.basis.iter().map(|b| key(b)).collect();
    let _ = writeln!(out, "basis = [{}]", basis.join(", "));
    write_vectors(&mut out, "nouns", &model.nouns);
    write_vectors(&mut out, "adjectives", &model.adjectives);
    write_vectors(&mut out, "pp", &model.pp_heads);
    for (verb, m) in model.verbs.iter() {
        let _ = writeln!(out, "\n[verbs.{}]", key(verb));
        let _ = writeln!(out, "orientation = \"{}\"", m.orientation().name());
        let _ = writeln!(out, "rows = [");
        for r in m.rows() {
            let _ = writeln!(out, "    {},", row(r));
        }
        let _ = writeln!(out, "]");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"
        language = "ga"
        basis = ["a", "b"]
        [nouns]
        "Impire" = [1, "1/2"]
        [verbs.cas]
        orientation = "object-subject"
        rows = [[1, 2], [3, 4]]
    "#;

    #[test]
    fn reads_fractions_and_orientation() {
        let m = parse_model(SMALL, "t").unwrap();
        assert_eq!(m.noun("impire").unwrap().coords()[1], Rational::new(1, 2));
        let v = m.verb("cas").unwrap();
        assert_eq!(v.orientation(), Orientation::ObjectSubject);
        assert_eq!(v.subject_object(0, 1), Rational::from_integer(3));
    }

    #[test]
    fn round_trips_through_the_writer() {
        let m = parse_model(SMALL, "t").unwrap();
        let again = parse_model(&write_model(&m), "t").unwrap();
        assert_eq!(m, again);
    }

    #[test]
    fn rejects_bad_shapes_and_values() {
        let bad_dim = "language = \"en\"\nbasis = [\"a\", \"b\"]\n[nouns]\nx = [1]\n";
        assert!(parse_model(bad_dim, "t").is_err());
        let negative = "language = \"en\"\nbasis = [\"a\"]\n[nouns]\nx = [-1]\n";
        assert!(parse_model(negative, "t").is_err());
        let zero_den = "language = \"en\"\nbasis = [\"a\"]\n[nouns]\nx = [\"1/0\"]\n";
        assert!(parse_model(zero_den, "t").is_err());
    }
}
