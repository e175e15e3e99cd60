//! Exact nearest-neighbor search over 3-D feature points.
//!
//! Axes cycle s1 → s2 → s3 with median splits. Queries are exact: results
//! always equal exhaustive search under the ordinal tie rule (ties in
//! distance go to the lower ordinal).

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::classifier::{ClassifierError, LabeledPoint};

const DIMS: usize = 3;

#[derive(Debug, Clone)]
struct Node {
    point: usize,
    axis: usize,
    left: Option<usize>,
    right: Option<usize>,
}

/// Balanced KD-tree owning a copy of the indexed points.
#[derive(Debug, Clone)]
pub struct KdTree {
    points: Vec<LabeledPoint>,
    nodes: Vec<Node>,
    root: usize,
}

/// Query result: a candidate with its squared distance; orders by
/// (distance, ordinal) so ties are deterministic.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Candidate {
    dist_sq: f64,
    ordinal: u64,
    point: usize,
}

impl Eq for Candidate {}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dist_sq
            .total_cmp(&other.dist_sq)
            .then(self.ordinal.cmp(&other.ordinal))
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl KdTree {
    /// Builds a tree over the given points. Construction is deterministic:
    /// points are split at the median of the cycling axis, with coordinate
    /// ties ordered by ordinal (lower ordinals go left).
    pub fn build(points: &[LabeledPoint]) -> Result<KdTree, ClassifierError> {
        if points.is_empty() {
            return Err(ClassifierError::EmptyTrainingSet);
        }
        let mut tree = KdTree {
            points: points.to_vec(),
            nodes: Vec::with_capacity(points.len()),
            root: 0,
        };
        let mut index: Vec<usize> = (0..points.len()).collect();
        tree.root = tree.build_rec(&mut index, 0);
        Ok(tree)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn build_rec(&mut self, index: &mut [usize], depth: usize) -> usize {
        let axis = depth % DIMS;
        index.sort_by(|&a, &b| {
            self.points[a]
                .features
                .axis(axis)
                .total_cmp(&self.points[b].features.axis(axis))
                .then(self.points[a].ordinal.cmp(&self.points[b].ordinal))
        });
        let mid = index.len() / 2;
        let point = index[mid];
        let node_id = self.nodes.len();
        self.nodes.push(Node {
            point,
            axis,
            left: None,
            right: None,
        });
        // Split the borrow: rebuild children from copies of the halves.
        let mut left_idx: Vec<usize> = index[..mid].to_vec();
        let mut right_idx: Vec<usize> = index[mid + 1..].to_vec();
        if !left_idx.is_empty() {
            let child = self.build_rec(&mut left_idx, depth + 1);
            self.nodes[node_id].left = Some(child);
        }
        if !right_idx.is_empty() {
            let child = self.build_rec(&mut right_idx, depth + 1);
            self.nodes[node_id].right = Some(child);
        }
        node_id
    }

    /// The k nearest points to `query` in Euclidean distance, closest
    /// first. Distance ties break toward the lower ordinal.
    pub fn knn(&self, query: &[f64; 3], k: usize) -> Result<Vec<(&LabeledPoint, f64)>, ClassifierError> {
        if k == 0 || k > self.points.len() {
            return Err(ClassifierError::KTooLarge {
                k,
                points: self.points.len(),
            });
        }
        // Max-heap of the best k so far; the top is the current worst.
        let mut best: BinaryHeap<Candidate> = BinaryHeap::with_capacity(k + 1);
        self.search(self.root, query, k, &mut best);
        let mut hits = best.into_sorted_vec();
        debug_assert_eq!(hits.len(), k);
        Ok(hits
            .drain(..)
            .map(|c| (&self.points[c.point], c.dist_sq.sqrt()))
            .collect())
    }

    fn search(&self, node_id: usize, query: &[f64; 3], k: usize, best: &mut BinaryHeap<Candidate>) {
        let node = &self.nodes[node_id];
        let point = &self.points[node.point];
        let coords = point.features.as_array();
        let dist_sq: f64 = coords
            .iter()
            .zip(query)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        let candidate = Candidate {
            dist_sq,
            ordinal: point.ordinal,
            point: node.point,
        };
        if best.len() < k {
            best.push(candidate);
        } else if candidate < *best.peek().expect("heap non-empty") {
            best.push(candidate);
            best.pop();
        }

        let diff = query[node.axis] - coords[node.axis];
        let (near, far) = if diff < 0.0 {
            (node.left, node.right)
        } else {
            (node.right, node.left)
        };
        if let Some(child) = near {
            self.search(child, query, k, best);
        }
        // The far side may still hold a tie with a lower ordinal, so only
        // prune on a strictly larger plane distance.
        let worst = best.peek().expect("heap non-empty").dist_sq;
        if let Some(child) = far {
            if best.len() < k || diff * diff <= worst {
                self.search(child, query, k, best);
            }
        }
    }

    /// In-order traversal of stored point indices, for structural checks.
    pub fn traversal(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.points.len());
        self.visit(self.root, &mut out);
        out
    }

    fn visit(&self, node_id: usize, out: &mut Vec<usize>) {
        let node = &self.nodes[node_id];
        if let Some(l) = node.left {
            self.visit(l, out);
        }
        out.push(node.point);
        if let Some(r) = node.right {
            self.visit(r, out);
        }
    }
}
