//! Labeled corpus loading, feature persistence and evaluation exports.
//!
//! File formats: feature tables and scatter exports are UTF-8 CSV with LF
//! line endings; models are JSON.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::classifier::{Label, Model};
use crate::features::{self, FeatureVector};
use crate::textprep::{self, RawDocument};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("missing directory: {0}")]
    MissingDirectory(PathBuf),
    #[error("corrupt model file {path} at line {line}, column {column}: {message}")]
    CorruptModelFile {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// A scored (or to-be-scored) corpus member.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub source_id: String,
    pub label: Label,
    pub features: FeatureVector,
}

/// Documents read from one directory, plus non-fatal read failures.
#[derive(Debug)]
pub struct LoadedCorpus {
    pub documents: Vec<(RawDocument, Label)>,
    pub warnings: Vec<String>,
}

/// A document the scoring pipeline rejected, with the reason.
#[derive(Debug, Clone)]
pub struct Exclusion {
    pub source_id: String,
    pub reason: String,
}

/// Scoring results: one entry per document that survived the pipeline.
#[derive(Debug)]
pub struct ScoredCorpus {
    pub entries: Vec<CorpusEntry>,
    pub exclusions: Vec<Exclusion>,
}

/// Reads every regular file in `dir` as a document labeled `label`, in
/// lexicographic filename order. Unreadable files become warnings.
pub fn load_corpus(dir: &Path, label: Label) -> Result<LoadedCorpus, CorpusError> {
    if !dir.is_dir() {
        return Err(CorpusError::MissingDirectory(dir.to_path_buf()));
    }
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|source| CorpusError::Io {
            path: dir.to_path_buf(),
            source,
        })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();

    let mut documents = Vec::with_capacity(paths.len());
    let mut warnings = Vec::new();
    for path in paths {
        match std::fs::read_to_string(&path) {
            Ok(text) => {
                let source_id = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.display().to_string());
                documents.push((RawDocument::new(source_id, text), label));
            }
            Err(err) => warnings.push(format!("skipping {}: {err}", path.display())),
        }
    }
    Ok(LoadedCorpus { documents, warnings })
}

/// Runs the full preprocessing and scoring pipeline over a document batch.
/// Pipeline failures exclude the document instead of aborting the batch.
pub fn score_corpus(documents: &[(RawDocument, Label)], top_n: usize) -> ScoredCorpus {
    let mut entries = Vec::with_capacity(documents.len());
    let mut exclusions = Vec::new();
    for (doc, label) in documents {
        match score_document(doc, top_n) {
            Ok(features) => entries.push(CorpusEntry {
                source_id: doc.source_id.clone(),
                label: *label,
                features,
            }),
            Err(reason) => exclusions.push(Exclusion {
                source_id: doc.source_id.clone(),
                reason,
            }),
        }
    }
    ScoredCorpus { entries, exclusions }
}

/// Scores a single document end to end.
pub fn score_document(doc: &RawDocument, top_n: usize) -> Result<FeatureVector, String> {
    let sectioned = textprep::prepare(doc).map_err(|e| e.to_string())?;
    features::extract_features(&sectioned, top_n).map_err(|e| e.to_string())
}

/// Builds a model from scored entries, assigning ordinals by entry order.
pub fn model_from_entries(entries: &[CorpusEntry], k: usize) -> Model {
    Model::from_entries(
        entries
            .iter()
            .map(|e| (e.source_id.clone(), e.label, e.features)),
        k,
    )
}

pub fn save_model(path: &Path, model: &Model) -> Result<(), CorpusError> {
    let json = serde_json::to_string_pretty(model).expect("model serializes");
    std::fs::write(path, json).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_model(path: &Path) -> Result<Model, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|err| CorpusError::CorruptModelFile {
        path: path.to_path_buf(),
        line: err.line(),
        column: err.column(),
        message: err.to_string(),
    })
}

/// Projection axis for scatter exports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    S1,
    S2,
    S3,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::S1 => "s1",
            Axis::S2 => "s2",
            Axis::S3 => "s3",
        }
    }

    fn project(self, fv: &FeatureVector) -> f64 {
        match self {
            Axis::S1 => fv.s1,
            Axis::S2 => fv.s2,
            Axis::S3 => fv.s3,
        }
    }
}

impl std::str::FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "s1" => Ok(Axis::S1),
            "s2" => Ok(Axis::S2),
            "s3" => Ok(Axis::S3),
            other => Err(format!("unknown axis {other:?} (expected s1, s2 or s3)")),
        }
    }
}

/// A two-axis projection of scored entries, ready for plotting.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatterExport {
    pub axes: (Axis, Axis),
    pub rows: Vec<(String, Label, f64, f64)>,
}

/// Projects entries onto two feature axes. The default projection (s1, s2)
/// drops the references score.
pub fn export_scatter(entries: &[CorpusEntry], axes: (Axis, Axis)) -> ScatterExport {
    ScatterExport {
        axes,
        rows: entries
            .iter()
            .map(|e| {
                (
                    e.source_id.clone(),
                    e.label,
                    axes.0.project(&e.features),
                    axes.1.project(&e.features),
                )
            })
            .collect(),
    }
}

impl ScatterExport {
    pub fn to_csv(&self) -> String {
        let mut out = format!("source_id,label,{},{}\n", self.axes.0.name(), self.axes.1.name());
        for (id, label, x, y) in &self.rows {
            let _ = writeln!(out, "{},{label},{x},{y}", csv_field(id));
        }
        out
    }
}

/// Full-precision feature table, one row per entry.
pub fn feature_table_csv(entries: &[CorpusEntry]) -> String {
    let mut out = String::from("source_id,label,s1,s2,s3\n");
    for e in entries {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            csv_field(&e.source_id),
            e.label,
            e.features.s1,
            e.features.s2,
            e.features.s3
        );
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
