//! The three keyword self-reference feature scores.
//!
//! * s1 — how often title/abstract keywords recur in the body, normalized
//!   by body length.
//! * s2 — occurrences of the top-N most used stems relative to all other
//!   occurrences across the whole paper.
//! * s3 — how often reference-section keywords recur in the body,
//!   normalized by body length.
//!
//! All scores are computed as exact integer ratios and converted to
//! floating point only at the [`FeatureVector`] boundary.

use std::collections::BTreeSet;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::textprep::{SectionedDocument, Token};

/// Default number of top-ranked stems for the repetition score.
pub const DEFAULT_TOP_N: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FeatureError {
    #[error("empty body: scores are undefined without body tokens")]
    EmptyBody,
    #[error("degenerate vocabulary: fewer than 2 distinct stems")]
    DegenerateVocabulary,
}

/// A multiset of stems. Insertion order is preserved so that ranking ties
/// break by first occurrence in the document.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KeywordBag {
    counts: IndexMap<String, u64>,
    total: u64,
}

impl KeywordBag {
    pub fn from_stems<I, S>(stems: I) -> KeywordBag
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut bag = KeywordBag::default();
        for stem in stems {
            *bag.counts.entry(stem.into()).or_insert(0) += 1;
            bag.total += 1;
        }
        bag
    }

    /// Multiplicity of a stem; zero when absent.
    pub fn multiplicity(&self, stem: &str) -> u64 {
        self.counts.get(stem).copied().unwrap_or(0)
    }

    /// Total number of occurrences (the multiset cardinality).
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of distinct stems.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// The set view of the bag's stems.
    pub fn stem_set(&self) -> BTreeSet<String> {
        self.counts.keys().cloned().collect()
    }

    /// Distinct stems sorted by multiplicity descending, ties broken by
    /// first occurrence.
    pub fn ranked(&self) -> Vec<(&str, u64)> {
        let mut entries: Vec<(&str, u64)> =
            self.counts.iter().map(|(s, &m)| (s.as_str(), m)).collect();
        entries.sort_by_key(|&(_, m)| std::cmp::Reverse(m));
        entries
    }
}

/// Builds the stem multiset of a token list.
pub fn bag_of(tokens: &[Token]) -> KeywordBag {
    KeywordBag::from_stems(tokens.iter().map(|t| t.stem.as_str()))
}

/// The point (s1, s2, s3) representing one paper.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
}

impl FeatureVector {
    pub fn new(s1: f64, s2: f64, s3: f64) -> Self {
        Self { s1, s2, s3 }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.s1, self.s2, self.s3]
    }

    pub fn axis(&self, i: usize) -> f64 {
        self.as_array()[i]
    }
}

/// Title/abstract score: occurrences of title/abstract keywords in the body
/// divided by the body length. The keyword collection is a set, so
/// repetition in the abstract is not rewarded.
pub fn score_title_abstract(
    keywords: &BTreeSet<String>,
    body: &KeywordBag,
) -> Result<f64, FeatureError> {
    overlap_ratio(keywords, body)
}

/// References score: same ratio as the title/abstract score but against the
/// set of reference-section keywords. Irrelevant reference tokens cannot
/// hurt the score because the references length is not in the denominator.
pub fn score_references(keywords: &BTreeSet<String>, body: &KeywordBag) -> Result<f64, FeatureError> {
    overlap_ratio(keywords, body)
}

fn overlap_ratio(keywords: &BTreeSet<String>, body: &KeywordBag) -> Result<f64, FeatureError> {
    if body.is_empty() {
        return Err(FeatureError::EmptyBody);
    }
    let hits: u64 = keywords.iter().map(|k| body.multiplicity(k)).sum();
    Ok(hits as f64 / body.total() as f64)
}

/// Word-repetition score: occurrences of the top-N ranked stems over the
/// occurrences of everything else. N is clamped to the legal range
/// `1..=distinct-1`, which keeps short documents scorable and guarantees a
/// nonzero denominator.
pub fn score_repetition(paper: &KeywordBag, top_n: usize) -> Result<f64, FeatureError> {
    if paper.distinct() < 2 {
        return Err(FeatureError::DegenerateVocabulary);
    }
    let n_eff = top_n.clamp(1, paper.distinct() - 1);
    let top: u64 = paper.ranked()[..n_eff].iter().map(|&(_, m)| m).sum();
    Ok(top as f64 / (paper.total() - top) as f64)
}

/// Scores a sectioned document: s1 and s3 compare the title/abstract and
/// reference keyword sets against the body multiset, s2 ranks the whole
/// paper's stems.
pub fn extract_features(doc: &SectionedDocument, top_n: usize) -> Result<FeatureVector, FeatureError> {
    let body = bag_of(&doc.body);
    let whole = KeywordBag::from_stems(
        doc.title_abstract
            .iter()
            .chain(&doc.body)
            .chain(&doc.references)
            .map(|t| t.stem.as_str()),
    );
    let title_abstract_set = bag_of(&doc.title_abstract).stem_set();
    let references_set = bag_of(&doc.references).stem_set();

    let s1 = score_title_abstract(&title_abstract_set, &body)?;
    let s2 = score_repetition(&whole, top_n)?;
    let s3 = score_references(&references_set, &body)?;
    Ok(FeatureVector::new(s1, s2, s3))
}
