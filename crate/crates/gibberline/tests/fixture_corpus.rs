//! The shipped fixture corpus under `fixtures/corpus/` and its pipeline
//! behavior.

mod common;

use common::{fixture_dir, scored_fixture_entries};
use gibberline::synth::{write_fixture_corpus, FIXTURE_SEED};

/// Regenerates the shipped corpus. Run explicitly after changing the
/// generator: `cargo test -p gibberline --test fixture_corpus -- --ignored`
#[test]
#[ignore = "rewrites fixtures/corpus; run on generator changes only"]
fn regenerate_fixture_corpus() {
    write_fixture_corpus(&fixture_dir(), 50, 50, FIXTURE_SEED).unwrap();
}

/// The shipped files are exactly what the generator produces for the
/// documented seed.
#[test]
fn shipped_corpus_matches_generator() {
    let tmp = tempfile::tempdir().unwrap();
    write_fixture_corpus(tmp.path(), 50, 50, FIXTURE_SEED).unwrap();
    for sub in ["generated", "human"] {
        let shipped = fixture_dir().join(sub);
        let fresh = tmp.path().join(sub);
        let mut names: Vec<_> = std::fs::read_dir(&shipped)
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        names.sort();
        assert_eq!(names.len(), 50, "{sub} corpus size");
        for name in names {
            let a = std::fs::read_to_string(shipped.join(&name)).unwrap();
            let b = std::fs::read_to_string(fresh.join(&name)).unwrap();
            assert_eq!(a, b, "{sub}/{name:?} differs from generator output");
        }
    }
}

#[test]
fn fixture_corpus_scores_cleanly() {
    let entries = scored_fixture_entries();
    assert_eq!(entries.len(), 100);
    for e in &entries {
        assert!(e.features.s1 >= 0.0 && e.features.s1 <= 1.0, "{}: {:?}", e.source_id, e.features);
        assert!(e.features.s3 >= 0.0 && e.features.s3 <= 1.0, "{}: {:?}", e.source_id, e.features);
        assert!(e.features.s2 >= 0.0);
    }
}
