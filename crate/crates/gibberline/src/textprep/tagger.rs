//! Rule-based part-of-speech tagging.
//!
//! Tagging only has to decide which tokens to keep: nouns, adjectives and
//! unrecognized words pass the filter, everything else is dropped. A
//! closed-class lexicon of frequent function words maps to [`PosTag::Other`],
//! suffix rules catch common noun and adjective endings, and anything left
//! over is [`PosTag::Unknown`] — often exactly the technical jargon the
//! features care about.

use std::collections::HashMap;
use std::path::Path;
use std::sync::OnceLock;

/// Tag categories. Only the distinction kept-vs-dropped matters downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PosTag {
    Noun,
    Adjective,
    Unknown,
    Other,
}

impl PosTag {
    /// True for the open classes the keyword features retain.
    pub fn is_kept(self) -> bool {
        !matches!(self, PosTag::Other)
    }

    fn parse(s: &str) -> Option<PosTag> {
        match s {
            "NOUN" => Some(PosTag::Noun),
            "ADJECTIVE" => Some(PosTag::Adjective),
            "UNKNOWN" => Some(PosTag::Unknown),
            "OTHER" => Some(PosTag::Other),
            _ => None,
        }
    }
}

const LEXICON_TSV: &str = include_str!("../../data/lexicon.tsv");
const SUFFIXES_TSV: &str = include_str!("../../data/suffixes.tsv");

/// Lexicon + suffix-rule tagger. Construction parses the tables once;
/// tagging is a map lookup followed by longest-suffix matching.
#[derive(Debug, Clone)]
pub struct Tagger {
    lexicon: HashMap<String, PosTag>,
    // Sorted longest-first so the most specific suffix wins.
    suffixes: Vec<(String, PosTag)>,
}

impl Tagger {
    /// The tagger built from the bundled data tables.
    pub fn bundled() -> &'static Tagger {
        static BUNDLED: OnceLock<Tagger> = OnceLock::new();
        BUNDLED.get_or_init(|| {
            Tagger::from_tables(LEXICON_TSV, SUFFIXES_TSV)
                .expect("bundled tagger tables are well-formed")
        })
    }

    /// Parses `word<TAB>tag` / `suffix<TAB>tag` tables, one entry per line.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn from_tables(lexicon: &str, suffixes: &str) -> Result<Tagger, String> {
        let parse = |table: &str, what: &str| -> Result<Vec<(String, PosTag)>, String> {
            table
                .lines()
                .enumerate()
                .filter(|(_, line)| !line.trim().is_empty() && !line.starts_with('#'))
                .map(|(no, line)| {
                    let (entry, tag) = line
                        .split_once('\t')
                        .ok_or_else(|| format!("{what} line {}: missing tab", no + 1))?;
                    let tag = PosTag::parse(tag.trim())
                        .ok_or_else(|| format!("{what} line {}: bad tag {tag:?}", no + 1))?;
                    Ok((entry.trim().to_string(), tag))
                })
                .collect()
        };
        let lexicon = parse(lexicon, "lexicon")?.into_iter().collect();
        let mut suffixes = parse(suffixes, "suffixes")?;
        suffixes.sort_by_key(|(s, _)| std::cmp::Reverse(s.len()));
        Ok(Tagger { lexicon, suffixes })
    }

    /// Loads a tagger with the lexicon replaced by the file at `path`,
    /// keeping the bundled suffix rules.
    pub fn with_lexicon_file(path: &Path) -> std::io::Result<Tagger> {
        let lexicon = std::fs::read_to_string(path)?;
        Tagger::from_tables(&lexicon, SUFFIXES_TSV)
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
    }

    /// Tags a single lowercase word. Deterministic: lexicon first, then the
    /// longest matching suffix rule (the word must outsize the suffix by at
    /// least two characters), otherwise unknown.
    pub fn tag(&self, word: &str) -> PosTag {
        if let Some(&tag) = self.lexicon.get(word) {
            return tag;
        }
        for (suffix, tag) in &self.suffixes {
            if word.len() >= suffix.len() + 2 && word.ends_with(suffix.as_str()) {
                return *tag;
            }
        }
        PosTag::Unknown
    }
}

/// Tags each word with the bundled tagger.
pub fn tag_pos(words: &[String]) -> Vec<(String, PosTag)> {
    let tagger = Tagger::bundled();
    words
        .iter()
        .map(|w| (w.clone(), tagger.tag(w)))
        .collect()
}
