//! Helpers shared by the integration test targets.
//! Each target uses a subset, so unused items are expected per-target.
#![allow(dead_code)]

use std::path::{Path, PathBuf};

use gibberline::classifier::Label;
use gibberline::corpus::{load_corpus, score_corpus, CorpusEntry};
use gibberline::features::DEFAULT_TOP_N;

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/corpus")
}

/// Loads and scores the shipped synthetic corpus (50 generated + 50 human).
pub fn scored_fixture_entries() -> Vec<CorpusEntry> {
    let mut documents = Vec::new();
    for (sub, label) in [("generated", Label::Generated), ("human", Label::Human)] {
        let loaded = load_corpus(&fixture_dir().join(sub), label).unwrap();
        assert!(loaded.warnings.is_empty());
        documents.extend(loaded.documents);
    }
    let scored = score_corpus(&documents, DEFAULT_TOP_N);
    assert!(
        scored.exclusions.is_empty(),
        "fixture docs must all score: {:?}",
        scored.exclusions
    );
    scored.entries
}
