//! End-to-end runs of the `discotrans` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_discotrans"))
        .args(args)
        .env_remove("DISCOTRANS_FIXTURES")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on standard output")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("discotrans-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn grammar_check_accepts_and_rejects() {
    let out = run(&["grammar", "check", "--lang", "en", "Yoda is a powerful Jedi"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "ACCEPT");
    assert_eq!(v["pairings"].as_array().unwrap().len(), 3);

    let out = run(&[
        "--format",
        "text",
        "grammar",
        "check",
        "--lang",
        "ga",
        "Yoda é cumhachtach Jedi Is",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("REJECT"));
}

#[test]
fn missing_word_is_a_domain_error() {
    let out = run(&["grammar", "check", "--lang", "en", "Yoda is a blorf"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("blorf"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["sentence"]).status.code(), Some(2));
    assert_eq!(run(&["bleu", "--ref", "a"]).status.code(), Some(2));
    assert_eq!(
        run(&["concept", "distance", "--a", "en:Pluto", "--b", "ga:Grian"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["concept", "distance", "--a", "/no/such/file.json", "--b", "ga:Grian"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn yoda_pair_scores_a_fifth() {
    let out = run(&[
        "sentence",
        "compare",
        "Yoda is a powerful Jedi",
        "Is Jedi cróga é Palpatine",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["inner"], 8);
    assert_eq!(v["lenA"], 348);
    assert_eq!(v["lenB"], 4);
    assert!((v["score"].as_f64().unwrap() - 0.21).abs() < 0.005);
}

#[test]
fn bleu_row_four_is_within_the_band() {
    let out = run(&[
        "bleu",
        "--lang",
        "ga",
        "--ref",
        "Casann na Jedi go Mace Windu cumhachtach",
        "--cand",
        "Casann Ginearál Grievous go Mace Windu cróga",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["smoothing"], "method7-nltk32");
    assert!((v["score"].as_f64().unwrap() - 0.27).abs() <= 0.05);
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["concept", "distance", "--a", "en:Jupiter", "--b", "ga:Iúpatar"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert!((v["total"].as_f64().unwrap() - 0.3).abs() < 1e-9);
}

#[test]
fn concept_files_round_trip_through_translation() {
    let dir = scratch("concepts");
    let candidates = dir.join("en");
    std::fs::create_dir_all(&candidates).unwrap();
    for noun in ["Venus", "Jupiter", "Mars", "Apple", "Sun"] {
        let out = run(&["concept", "build", "--lang", "en", "--noun", noun]);
        assert_eq!(out.status.code(), Some(0));
        std::fs::write(candidates.join(format!("{noun}.json")), &out.stdout).unwrap();
    }
    for (query, answer) in [
        ("Véineas", "Venus"),
        ("Iúpatar", "Jupiter"),
        ("Mars", "Mars"),
        ("Úll", "Apple"),
        ("Grian", "Sun"),
    ] {
        let out = run(&["concept", "build", "--lang", "ga", "--noun", query]);
        let file = dir.join("query.json");
        std::fs::write(&file, &out.stdout).unwrap();
        let out = run(&[
            "concept",
            "translate",
            "--query",
            file.to_str().unwrap(),
            "--candidates",
            candidates.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json(&out)["ranking"][0]["name"], answer);
    }
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn model_build_writes_a_readable_model() {
    let dir = scratch("model");
    let file = dir.join("model.toml");
    let out = run(&[
        "model",
        "build",
        "--corpus",
        "star_wars",
        "--lang",
        "en",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "sentence",
        "compare",
        "--model-a",
        file.to_str().unwrap(),
        "--model-b",
        file.to_str().unwrap(),
        "Yoda is a powerful Jedi",
        "Yoda is a powerful Jedi",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!((json(&out)["score"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn reproduce_similarity_passes() {
    let out = run(&["--format", "text", "reproduce", "--suite", "similarity"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("== similarity (7/7 pass)"));
    assert!(text.trim_end().ends_with("overall: PASS"));
}

#[test]
fn fixture_directory_overrides_files() {
    let dir = scratch("fixtures");
    std::fs::write(
        dir.join("lexicon.en.toml"),
        "language = \"en\"\n\n[[entry]]\nsurface = \"Yoda\"\ncategory = \"noun\"\n",
    )
    .unwrap();
    let out = run(&[
        "--fixtures",
        dir.to_str().unwrap(),
        "grammar",
        "check",
        "--lang",
        "en",
        "Yoda is a powerful Jedi",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&[
        "--fixtures",
        dir.to_str().unwrap(),
        "grammar",
        "check",
        "--lang",
        "ga",
        "Is Jedi cumhachtach é Yoda",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let _ = std::fs::remove_dir_all(&dir);
}
