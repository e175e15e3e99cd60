//! k-nearest-neighbor classification and leave-one-out cross-validation.

mod kdtree;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use kdtree::KdTree;

use crate::features::FeatureVector;

/// Default vote size. Odd, so label ties cannot occur.
pub const DEFAULT_K: usize = 3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifierError {
    #[error("empty training set")]
    EmptyTrainingSet,
    #[error("k = {k} exceeds the {points} available points")]
    KTooLarge { k: usize, points: usize },
    #[error("insufficient points: leave-one-out with k = {k} needs at least {} points, got {points}", k + 1)]
    InsufficientPoints { k: usize, points: usize },
}

/// Binary classification outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Human,
    Generated,
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Human => write!(f, "human"),
            Label::Generated => write!(f, "generated"),
        }
    }
}

impl std::str::FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "human" => Ok(Label::Human),
            "generated" => Ok(Label::Generated),
            other => Err(format!("unknown label {other:?}")),
        }
    }
}

/// A feature vector with a known classification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledPoint {
    pub source_id: String,
    pub label: Label,
    pub features: FeatureVector,
    /// Insertion index; unique within a model. Breaks distance ties.
    pub ordinal: u64,
}

/// Training set plus vote size.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Model {
    pub k: usize,
    pub points: Vec<LabeledPoint>,
}

impl Model {
    /// Builds a model from feature vectors, assigning ordinals in order.
    pub fn from_entries(entries: impl IntoIterator<Item = (String, Label, FeatureVector)>, k: usize) -> Model {
        let points = entries
            .into_iter()
            .enumerate()
            .map(|(i, (source_id, label, features))| LabeledPoint {
                source_id,
                label,
                features,
                ordinal: i as u64,
            })
            .collect();
        Model { k, points }
    }

    pub fn classify(&self, query: &FeatureVector) -> Result<Classification, ClassifierError> {
        classify(&self.points, query, self.k)
    }
}

/// Vote breakdown for one classification.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub label: Label,
    pub human_votes: usize,
    pub generated_votes: usize,
    /// The k neighbors as (source_id, label, distance), closest first.
    pub neighbors: Vec<(String, Label, f64)>,
}

/// Classifies a query by majority vote of its k nearest neighbors. An even
/// k can produce a tied vote; the tie goes to the single nearest neighbor.
pub fn classify(
    points: &[LabeledPoint],
    query: &FeatureVector,
    k: usize,
) -> Result<Classification, ClassifierError> {
    let tree = KdTree::build(points)?;
    classify_with_tree(&tree, query, k)
}

/// Same vote over a prebuilt tree, for repeated queries.
pub fn classify_with_tree(
    tree: &KdTree,
    query: &FeatureVector,
    k: usize,
) -> Result<Classification, ClassifierError> {
    let hits = tree.knn(&query.as_array(), k)?;
    let human_votes = hits.iter().filter(|(p, _)| p.label == Label::Human).count();
    let generated_votes = k - human_votes;
    let label = match human_votes.cmp(&generated_votes) {
        std::cmp::Ordering::Greater => Label::Human,
        std::cmp::Ordering::Less => Label::Generated,
        std::cmp::Ordering::Equal => hits[0].0.label,
    };
    Ok(Classification {
        label,
        human_votes,
        generated_votes,
        neighbors: hits
            .into_iter()
            .map(|(p, d)| (p.source_id.clone(), p.label, d))
            .collect(),
    })
}

/// One leave-one-out cross-validation run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrossValEntry {
    pub k: usize,
    pub error_rate: f64,
    /// Human papers classified as generated.
    pub human_as_generated: usize,
    /// Generated papers classified as human.
    pub generated_as_human: usize,
    pub total: usize,
}

impl CrossValEntry {
    pub fn misclassified(&self) -> usize {
        self.human_as_generated + self.generated_as_human
    }
}

/// Per-k error rates over the same point set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossValReport {
    pub entries: Vec<CrossValEntry>,
}

/// Leave-one-out cross-validation: classifies each point against a model of
/// all the others.
pub fn loocv(points: &[LabeledPoint], k: usize) -> Result<CrossValEntry, ClassifierError> {
    if points.len() < k + 1 {
        return Err(ClassifierError::InsufficientPoints {
            k,
            points: points.len(),
        });
    }
    let mut human_as_generated = 0;
    let mut generated_as_human = 0;
    let mut rest = Vec::with_capacity(points.len() - 1);
    for (i, held_out) in points.iter().enumerate() {
        rest.clear();
        rest.extend(points.iter().take(i).cloned());
        rest.extend(points.iter().skip(i + 1).cloned());
        let outcome = classify(&rest, &held_out.features, k)?;
        match (held_out.label, outcome.label) {
            (Label::Human, Label::Generated) => human_as_generated += 1,
            (Label::Generated, Label::Human) => generated_as_human += 1,
            _ => {}
        }
    }
    let misclassified = human_as_generated + generated_as_human;
    Ok(CrossValEntry {
        k,
        error_rate: misclassified as f64 / points.len() as f64,
        human_as_generated,
        generated_as_human,
        total: points.len(),
    })
}

/// Runs loocv once per requested k, in the given order.
pub fn sweep_k(points: &[LabeledPoint], k_values: &[usize]) -> Result<CrossValReport, ClassifierError> {
    let entries = k_values
        .iter()
        .map(|&k| loocv(points, k))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CrossValReport { entries })
}

/// Per-axis min-max scaling parameters, fit on a training set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MinMaxScaler {
    pub min: [f64; 3],
    pub max: [f64; 3],
}

impl MinMaxScaler {
    pub fn fit(points: &[LabeledPoint]) -> Option<MinMaxScaler> {
        if points.is_empty() {
            return None;
        }
        let mut min = [f64::INFINITY; 3];
        let mut max = [f64::NEG_INFINITY; 3];
        for p in points {
            for (i, v) in p.features.as_array().into_iter().enumerate() {
                min[i] = min[i].min(v);
                max[i] = max[i].max(v);
            }
        }
        Some(MinMaxScaler { min, max })
    }

    /// Maps each axis into [0, 1]; a constant axis maps to 0.
    pub fn transform(&self, fv: &FeatureVector) -> FeatureVector {
        let scaled: Vec<f64> = fv
            .as_array()
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                let range = self.max[i] - self.min[i];
                if range == 0.0 {
                    0.0
                } else {
                    (v - self.min[i]) / range
                }
            })
            .collect();
        FeatureVector::new(scaled[0], scaled[1], scaled[2])
    }

    pub fn transform_points(&self, points: &[LabeledPoint]) -> Vec<LabeledPoint> {
        points
            .iter()
            .map(|p| LabeledPoint {
                features: self.transform(&p.features),
                ..p.clone()
            })
            .collect()
    }
}
