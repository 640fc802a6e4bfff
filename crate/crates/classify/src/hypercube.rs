//! The binary-classification model space over `n` sample points: the
//! `n`-dimensional hypercube. A model is a full labeling (one bit per
//! point, packed into the `ModelId`), a feedback response is "this point's
//! label is wrong" (one bit flip, length 1), and distance is Hamming.

use eqgraph_core::{DomainAdapter, ModelId};

/// Hypercube domain over `n` labeled points (`n ≤ 20`; the model space has
/// `2^n` labelings). Bit `i` of a `ModelId` is point `i`'s label.
#[derive(Debug, Clone, Copy)]
pub struct HypercubeDomain {
    n: usize,
}

impl HypercubeDomain {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1 && n <= 20, "hypercube dimension out of range: {n}");
        HypercubeDomain { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label_of(&self, s: ModelId, point: usize) -> bool {
        debug_assert!(point < self.n);
        s.index() >> point & 1 == 1
    }

    /// Packs a label vector into its `ModelId`.
    pub fn id_of_labels(&self, labels: &[bool]) -> ModelId {
        assert_eq!(labels.len(), self.n);
        ModelId(
            labels
                .iter()
                .enumerate()
                .fold(0usize, |acc, (i, &b)| acc | (usize::from(b) << i)),
        )
    }

    pub fn labels_of(&self, s: ModelId) -> Vec<bool> {
        (0..self.n).map(|i| self.label_of(s, i)).collect()
    }
}

impl DomainAdapter for HypercubeDomain {
    fn model_count(&self) -> usize {
        1 << self.n
    }

    fn is_directed(&self) -> bool {
        false
    }

    fn feedback_edges(&self, s: ModelId) -> Vec<(ModelId, u64)> {
        (0..self.n)
            .map(|i| (ModelId(s.index() ^ (1 << i)), 1))
            .collect()
    }

    fn distance(&self, s: ModelId, t: ModelId) -> u64 {
        (s.index() ^ t.index()).count_ones() as u64
    }

    fn reach_contains(&self, s: ModelId, fb: ModelId, _edge_len: u64, cand: ModelId) -> bool {
        if fb == s {
            // A confirmation reaches only the confirmed model.
            return cand == s;
        }
        // The response corrects exactly one point's label; consistent
        // models are those agreeing with the correction on that point.
        let flipped = s.index() ^ fb.index();
        debug_assert_eq!(flipped.count_ones(), 1);
        cand.index() & flipped == fb.index() & flipped
    }
}
