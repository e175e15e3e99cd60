//! Text preprocessing: tokenization, section location, part-of-speech
//! filtering and stemming.
//!
//! Section boundaries are located on the raw token stream before any
//! filtering, so the cleanup steps cannot disturb them. Missing section
//! keywords fall back to fixed fractions of the document.

mod porter;
mod tagger;

use thiserror::Error;

pub use porter::stem;
pub use tagger::{tag_pos, PosTag, Tagger};

/// Shortest token stream for which sectioning is attempted.
pub const MIN_TOKENS: usize = 30;

/// Title/abstract fallback: first 5% of tokens, clamped to [10, 300].
const TITLE_ABSTRACT_FRACTION: usize = 20; // denominator, i.e. 1/20
const TITLE_ABSTRACT_MIN: usize = 10;
const TITLE_ABSTRACT_MAX: usize = 300;
/// References fallback: last 10% of tokens.
const REFERENCES_FRACTION: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TextprepError {
    #[error("document too short: {0} tokens (need at least {MIN_TOKENS})")]
    DocumentTooShort(usize),
}

/// A plain-text document paired with an opaque identifier.
#[derive(Debug, Clone)]
pub struct RawDocument {
    pub source_id: String,
    pub text: String,
}

impl RawDocument {
    pub fn new(source_id: impl Into<String>, text: impl Into<String>) -> Self {
        Self {
            source_id: source_id.into(),
            text: text.into(),
        }
    }
}

/// A filtered token: lowercase surface form, POS tag and stem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub tag: PosTag,
    pub stem: String,
}

/// How a section boundary was determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryMethod {
    KeywordFound,
    FractionFallback,
}

/// Token indices delimiting title+abstract, body and references.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectionBounds {
    pub abstract_start: usize,
    pub body_start: usize,
    pub references_start: usize,
    pub abstract_method: BoundaryMethod,
    pub body_method: BoundaryMethod,
    pub references_method: BoundaryMethod,
}

/// A document split into filtered, stemmed sections.
#[derive(Debug, Clone)]
pub struct SectionedDocument {
    pub source_id: String,
    pub title_abstract: Vec<Token>,
    pub body: Vec<Token>,
    pub references: Vec<Token>,
    pub bounds: SectionBounds,
}

/// Splits text into lowercase word tokens.
///
/// A token is a maximal run of alphanumeric characters, lowercased. Runs
/// without any alphabetic character and runs shorter than two bytes are
/// dropped, which strips bare numbers, single ASCII letters and formula
/// debris.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .map(|run| run.to_lowercase())
        .filter(|run| run.len() >= 2 && run.chars().any(|c| c.is_alphabetic()))
        .collect()
}

/// Locates section boundaries on the raw token stream.
///
/// The abstract starts at the first "abstract" token, the body at the first
/// subsequent "introduction", and the references at the last
/// "references"/"bibliography" after the body start. Absent keywords fall
/// back to fixed fractions of the document. Boundaries are forced
/// monotonically non-decreasing.
pub fn locate_sections(tokens: &[String]) -> Result<SectionBounds, TextprepError> {
    let n = tokens.len();
    if n < MIN_TOKENS {
        return Err(TextprepError::DocumentTooShort(n));
    }

    let abstract_kw = tokens.iter().position(|t| t == "abstract");
    let abstract_start = abstract_kw.unwrap_or(0);
    let abstract_method = method_of(abstract_kw);

    let body_kw = tokens
        .iter()
        .enumerate()
        .skip(abstract_start)
        .find(|(_, t)| *t == "introduction")
        .map(|(i, _)| i);
    let body_fallback =
        (n / TITLE_ABSTRACT_FRACTION).clamp(TITLE_ABSTRACT_MIN, TITLE_ABSTRACT_MAX);
    let body_start = body_kw.unwrap_or(body_fallback).clamp(abstract_start, n);
    let body_method = method_of(body_kw);

    let references_kw = tokens
        .iter()
        .enumerate()
        .skip(body_start)
        .filter(|(_, t)| *t == "references" || *t == "bibliography")
        .map(|(i, _)| i)
        .last();
    let references_fallback = n - n / REFERENCES_FRACTION;
    let references_start = references_kw
        .unwrap_or(references_fallback)
        .clamp(body_start, n);
    let references_method = method_of(references_kw);

    Ok(SectionBounds {
        abstract_start,
        body_start,
        references_start,
        abstract_method,
        body_method,
        references_method,
    })
}

fn method_of(found: Option<usize>) -> BoundaryMethod {
    if found.is_some() {
        BoundaryMethod::KeywordFound
    } else {
        BoundaryMethod::FractionFallback
    }
}

/// Keeps only the words tagged as noun, adjective or unknown.
pub fn filter_pos(tagged: &[(String, PosTag)]) -> Vec<String> {
    tagged
        .iter()
        .filter(|(_, tag)| tag.is_kept())
        .map(|(word, _)| word.clone())
        .collect()
}

/// Runs the full preprocessing pipeline with the bundled tagger tables.
pub fn prepare(doc: &RawDocument) -> Result<SectionedDocument, TextprepError> {
    prepare_with(doc, Tagger::bundled())
}

/// Runs tokenize → locate_sections → tag → filter → stem, sectioning on the
/// raw token stream. The section keyword tokens themselves are excluded
/// from their sections.
pub fn prepare_with(doc: &RawDocument, tagger: &Tagger) -> Result<SectionedDocument, TextprepError> {
    let tokens = tokenize(&doc.text);
    let bounds = locate_sections(&tokens)?;

    let clean = |slice: &[String], skip_first_at: Option<usize>| -> Vec<Token> {
        slice
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip_first_at)
            .map(|(_, w)| w)
            .filter_map(|word| {
                let tag = tagger.tag(word);
                tag.is_kept().then(|| Token {
                    surface: word.clone(),
                    tag,
                    stem: stem(word),
                })
            })
            .collect()
    };

    let kw_skip = |method: BoundaryMethod, offset: usize| {
        (method == BoundaryMethod::KeywordFound).then_some(offset)
    };

    let title_abstract = clean(
        &tokens[..bounds.body_start],
        kw_skip(bounds.abstract_method, bounds.abstract_start),
    );
    let body = clean(
        &tokens[bounds.body_start..bounds.references_start],
        kw_skip(bounds.body_method, 0),
    );
    let references = clean(
        &tokens[bounds.references_start..],
        kw_skip(bounds.references_method, 0),
    );

    Ok(SectionedDocument {
        source_id: doc.source_id.clone(),
        title_abstract,
        body,
        references,
        bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenize_basic() {
        assert_eq!(
            tokenize("Deep Learning, 2nd Edition!"),
            vec!["deep", "learning", "2nd", "edition"]
        );
    }

    #[test]
    fn tokenize_empty() {
        assert_eq!(tokenize(""), Vec::<String>::new());
    }

    #[test]
    fn tokenize_drops_numbers_and_single_letters() {
        assert_eq!(tokenize("A cat's α-test 42"), vec!["cat", "α", "test"]);
    }

    // Character-walk oracle: re-derive token boundaries one character at a
    // time, independent of the split-based implementation.
    #[test]
    fn tokenize_matches_character_walk() {
        let inputs = [
            "A cat's α-test 42",
            "the (quick) brown-fox; jumps_over 12 lazy dogs!!",
            "x2 y λ-calculus f(x)=x^2+1 naïve café",
            "",
            "   ",
            "one",
        ];
        for text in inputs {
            let mut oracle: Vec<String> = Vec::new();
            let mut run = String::new();
            for c in text.chars().chain(std::iter::once(' ')) {
                if c.is_alphanumeric() {
                    run.push(c);
                } else {
                    let lower = run.to_lowercase();
                    if lower.len() >= 2 && lower.chars().any(|c| c.is_alphabetic()) {
                        oracle.push(lower);
                    }
                    run.clear();
                }
            }
            assert_eq!(tokenize(text), oracle, "input {text:?}");
        }
    }

    fn words(spec: &[(&str, usize)]) -> Vec<String> {
        // Builds a token stream from (word, count) runs.
        spec.iter()
            .flat_map(|&(w, n)| std::iter::repeat(w.to_string()).take(n))
            .collect()
    }

    #[test]
    fn locate_all_keywords_found() {
        let mut tokens = words(&[("word", 4500)]);
        tokens[12] = "abstract".into();
        tokens[150] = "introduction".into();
        tokens[4000] = "references".into();
        let b = locate_sections(&tokens).unwrap();
        assert_eq!(
            (b.abstract_start, b.body_start, b.references_start),
            (12, 150, 4000)
        );
        assert_eq!(b.abstract_method, BoundaryMethod::KeywordFound);
        assert_eq!(b.body_method, BoundaryMethod::KeywordFound);
        assert_eq!(b.references_method, BoundaryMethod::KeywordFound);
    }

    #[test]
    fn locate_no_keywords_falls_back() {
        let tokens = words(&[("word", 1000)]);
        let b = locate_sections(&tokens).unwrap();
        assert_eq!(
            (b.abstract_start, b.body_start, b.references_start),
            (0, 50, 900)
        );
        assert_eq!(b.abstract_method, BoundaryMethod::FractionFallback);
        assert_eq!(b.body_method, BoundaryMethod::FractionFallback);
        assert_eq!(b.references_method, BoundaryMethod::FractionFallback);
    }

    #[test]
    fn locate_abstract_only_mixes_methods() {
        let mut tokens = words(&[("word", 1000)]);
        tokens[7] = "abstract".into();
        let b = locate_sections(&tokens).unwrap();
        assert_eq!(b.abstract_start, 7);
        assert_eq!(b.abstract_method, BoundaryMethod::KeywordFound);
        assert_eq!(b.body_method, BoundaryMethod::FractionFallback);
        assert_eq!(b.references_method, BoundaryMethod::FractionFallback);
        // Oracle re-scan: no "introduction" or "references" anywhere.
        assert!(!tokens.iter().any(|t| t == "introduction"));
        assert!(b.abstract_start <= b.body_start && b.body_start <= b.references_start);
    }

    #[test]
    fn locate_short_document_errors() {
        let tokens = words(&[("word", 29)]);
        assert_eq!(
            locate_sections(&tokens),
            Err(TextprepError::DocumentTooShort(29))
        );
    }

    #[test]
    fn locate_bibliography_counts_as_references() {
        let mut tokens = words(&[("word", 200)]);
        tokens[180] = "bibliography".into();
        let b = locate_sections(&tokens).unwrap();
        assert_eq!(b.references_start, 180);
        assert_eq!(b.references_method, BoundaryMethod::KeywordFound);
    }

    #[test]
    fn locate_takes_last_references_after_body() {
        // "references" mentioned mid-body must not win over the heading.
        let mut tokens = words(&[("word", 500)]);
        tokens[3] = "abstract".into();
        tokens[40] = "introduction".into();
        tokens[100] = "references".into();
        tokens[450] = "references".into();
        let b = locate_sections(&tokens).unwrap();
        assert_eq!(b.references_start, 450);
    }

    #[test]
    fn filter_pos_keeps_open_classes() {
        let tagged = vec![
            ("algorithm".to_string(), PosTag::Noun),
            ("the".to_string(), PosTag::Other),
        ];
        assert_eq!(filter_pos(&tagged), vec!["algorithm"]);
        assert_eq!(filter_pos(&[]), Vec::<String>::new());
    }

    #[test]
    fn filter_pos_is_subsequence() {
        let tagged: Vec<(String, PosTag)> = (0..50)
            .map(|i| {
                let tag = match i % 4 {
                    0 => PosTag::Noun,
                    1 => PosTag::Adjective,
                    2 => PosTag::Unknown,
                    _ => PosTag::Other,
                };
                (format!("w{i}"), tag)
            })
            .collect();
        let kept = filter_pos(&tagged);
        // Predicate oracle: exactly the kept-tag words, in order.
        let expected: Vec<String> = tagged
            .iter()
            .filter(|(_, t)| matches!(t, PosTag::Noun | PosTag::Adjective | PosTag::Unknown))
            .map(|(w, _)| w.clone())
            .collect();
        assert_eq!(kept, expected);
    }

    fn fixture_paper() -> RawDocument {
        let mut text = String::from("Graph Spectral Methods\n\nAbstract\n");
        text.push_str("We study spectral graph partitions and eigenvalue bounds for sparse matrices. ");
        text.push_str("Spectral partitions give eigenvalue certificates.\n\nIntroduction\n");
        for _ in 0..30 {
            text.push_str("The spectral partition of a sparse graph bounds the eigenvalue gap of its laplacian matrix. ");
        }
        text.push_str("\nReferences\n");
        text.push_str("Smith and Jones, Spectral bounds for graph laplacians, 1999. ");
        text.push_str("Doe, Eigenvalue methods in partition theory, 2003.");
        RawDocument::new("fixture", text)
    }

    #[test]
    fn prepare_keyword_fixture() {
        let doc = prepare(&fixture_paper()).unwrap();
        assert_eq!(doc.bounds.abstract_method, BoundaryMethod::KeywordFound);
        assert_eq!(doc.bounds.body_method, BoundaryMethod::KeywordFound);
        assert_eq!(doc.bounds.references_method, BoundaryMethod::KeywordFound);
        for section in [&doc.title_abstract, &doc.body, &doc.references] {
            for t in section {
                assert!(t.tag.is_kept(), "{:?} slipped through the filter", t);
                assert!(!t.stem.is_empty());
            }
        }
        // Section keyword tokens are excluded from their sections.
        assert!(doc.title_abstract.iter().all(|t| t.surface != "abstract"));
        assert!(doc.body.iter().all(|t| t.surface != "introduction"));
        assert!(doc.references.iter().all(|t| t.surface != "references"));
        assert!(!doc.body.is_empty());
        assert!(!doc.references.is_empty());
    }

    #[test]
    fn prepare_keywordless_fixture_falls_back() {
        let text = std::iter::repeat("partition spectra bound the laplacian gap tightly ")
            .take(40)
            .collect::<String>();
        let doc = prepare(&RawDocument::new("nofix", text)).unwrap();
        assert_eq!(doc.bounds.abstract_method, BoundaryMethod::FractionFallback);
        assert_eq!(doc.bounds.body_method, BoundaryMethod::FractionFallback);
        assert_eq!(doc.bounds.references_method, BoundaryMethod::FractionFallback);
    }

    #[test]
    fn prepare_too_short_propagates() {
        let doc = RawDocument::new("tiny", "just a few words here");
        assert!(matches!(
            prepare(&doc),
            Err(TextprepError::DocumentTooShort(_))
        ));
    }

    // Composition oracle: prepare equals manually chaining the four steps.
    #[test]
    fn prepare_matches_manual_composition() {
        let raw = fixture_paper();
        let doc = prepare(&raw).unwrap();

        let tokens = tokenize(&raw.text);
        let bounds = locate_sections(&tokens).unwrap();
        assert_eq!(doc.bounds, bounds);

        let manual = |slice: &[String], drop_at: Option<usize>| -> Vec<Token> {
            let kept: Vec<String> = slice
                .iter()
                .enumerate()
                .filter(|(i, _)| Some(*i) != drop_at)
                .map(|(_, w)| w.clone())
                .collect();
            let tagged = tag_pos(&kept);
            filter_pos(&tagged)
                .into_iter()
                .map(|w| Token {
                    tag: Tagger::bundled().tag(&w),
                    stem: stem(&w),
                    surface: w,
                })
                .collect()
        };
        assert_eq!(
            doc.title_abstract,
            manual(&tokens[..bounds.body_start], Some(bounds.abstract_start))
        );
        assert_eq!(
            doc.body,
            manual(&tokens[bounds.body_start..bounds.references_start], Some(0))
        );
        assert_eq!(
            doc.references,
            manual(&tokens[bounds.references_start..], Some(0))
        );
    }
}
