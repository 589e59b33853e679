//! Randomised checks of BLEU.

use std::collections::BTreeMap;

use discotrans_core::bleu::{bleu, brevity_penalty, modified_precision, Smoothing};
use proptest::prelude::*;

fn sentence(min: usize) -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(prop::sample::select(vec!["a", "b", "c", "d", "e", "f"]), min..12)
        .prop_map(|v| v.into_iter().map(String::from).collect())
}

fn rename(tokens: &[String], map: &BTreeMap<&str, &str>) -> Vec<String> {
    tokens.iter().map(|t| map[t.as_str()].to_string()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn unsmoothed_identity_scores_one(r in sentence(4)) {
        let report = bleu(&r, &r, Smoothing::None).unwrap();
        prop_assert!((report.score - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unsmoothed_scores_lie_in_the_unit_interval(r in sentence(1), c in sentence(1)) {
        let s = bleu(&r, &c, Smoothing::None).unwrap().score;
        prop_assert!((0.0..=1.0).contains(&s));
    }

    #[test]
    fn renaming_tokens_consistently_changes_nothing(r in sentence(1), c in sentence(2)) {
        let map: BTreeMap<&str, &str> =
            [("a", "q"), ("b", "r"), ("c", "s"), ("d", "t"), ("e", "u"), ("f", "v")].into_iter().collect();
        for smoothing in [Smoothing::None, Smoothing::Method7, Smoothing::Method7Nltk32] {
            let before = bleu(&r, &c, smoothing).unwrap().score;
            let after = bleu(&rename(&r, &map), &rename(&c, &map), smoothing).unwrap().score;
            prop_assert_eq!(before, after);
        }
    }

    #[test]
    fn clipped_matches_never_exceed_totals(r in sentence(1), c in sentence(1), n in 1usize..=4) {
        let p = modified_precision(&r, &c, n);
        prop_assert!(p.matched <= p.total);
        prop_assert_eq!(p.total, c.len().saturating_sub(n - 1));
    }

    #[test]
    fn brevity_penalty_is_at_most_one(r in 0usize..50, c in 1usize..50) {
        let bp = brevity_penalty(r, c);
        prop_assert!(bp > 0.0 && bp <= 1.0);
        prop_assert_eq!(bp == 1.0, c >= r);
    }
}
