//! Detection of computer-generated academic papers from plain text.
//!
//! The pipeline turns a document into three keyword self-reference scores
//! (title/abstract overlap, word repetition, references overlap) and
//! classifies the resulting 3-D feature vector with a k-nearest-neighbor
//! model backed by a KD-tree. Leave-one-out cross-validation utilities are
//! included for evaluating a labeled corpus.

pub mod classifier;
pub mod corpus;
pub mod features;
pub mod synth;
pub mod textprep;

pub use classifier::{Label, LabeledPoint, Model};
pub use features::FeatureVector;
pub use textprep::{RawDocument, SectionedDocument};
