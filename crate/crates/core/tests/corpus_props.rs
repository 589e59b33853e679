//! Randomised checks of window counting.

use discotrans_core::corpus::{window_counts, CorpusDoc};
use discotrans_core::Language;
use proptest::prelude::*;

const WORDS: [&str; 6] = ["Anakin", "Jedi", "turns", "evil", "Sith", "Padmé"];

fn doc() -> impl Strategy<Value = CorpusDoc> {
    prop::collection::vec(prop::collection::vec(prop::sample::select(WORDS.to_vec()), 1..10), 0..5).prop_map(
        |sentences| CorpusDoc {
            language: Language::English,
            sentences: sentences
                .into_iter()
                .map(|s| s.into_iter().map(String::from).collect())
                .collect(),
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn counts_add_over_concatenation(a in doc(), b in doc(), radius in 1usize..4) {
        let basis = vec!["Anakin".to_string(), "arg-evil".to_string()];
        let joined = window_counts(&a.concat(&b), &basis, radius).unwrap();
        let left = window_counts(&a, &basis, radius).unwrap();
        let right = window_counts(&b, &basis, radius).unwrap();
        for w in ["Jedi", "turns", "Sith", "Padmé", "evil"] {
            let sum: Vec<u64> = left.vector(w).iter().zip(right.vector(w)).map(|(x, y)| x + y).collect();
            prop_assert_eq!(joined.vector(w), sum);
        }
    }

    #[test]
    fn word_windows_are_symmetric(d in doc(), radius in 1usize..4) {
        for x in WORDS {
            for y in WORDS {
                if x == y {
                    continue;
                }
                let xy = window_counts(&d, &[y.to_string()], radius).unwrap().vector(x)[0];
                let yx = window_counts(&d, &[x.to_string()], radius).unwrap().vector(y)[0];
                prop_assert_eq!(xy, yx);
            }
        }
    }
}
