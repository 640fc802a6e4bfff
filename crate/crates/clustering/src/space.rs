//! Dense model spaces over all partitions of `0..n−1`, for either feedback
//! repertoire, with explicit-graph builders for cross-checks.

use std::collections::HashMap;

use eqgraph_core::{
    DomainAdapter, FeedbackGraph, ModelId, NoiseModel, SimulatedUser, ValidChoice,
};
use rand_chacha::ChaCha8Rng;

use crate::distance::{gc_distance, gc_feedback_edges, uc_distance, uc_feedback_edges};
use crate::partition::{enumerate_partitions, partition_index, Clustering};

/// Which responses the user may give.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeedbackMode {
    /// Merges and unspecified splits (directed graph).
    Unspecified,
    /// Merges and fully specified two-way splits (undirected graph).
    Specified,
}

/// All `Bell(n)` clusterings with dense ids, exposing the feedback
/// structure of the chosen mode.
pub struct ClusteringSpace {
    n: usize,
    mode: FeedbackMode,
    clusterings: Vec<Clustering>,
    index: HashMap<Clustering, usize>,
}

impl ClusteringSpace {
    pub fn new(n: usize, mode: FeedbackMode) -> Self {
        let clusterings = enumerate_partitions(n);
        let index = partition_index(&clusterings);
        ClusteringSpace {
            n,
            mode,
            clusterings,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> FeedbackMode {
        self.mode
    }

    pub fn clustering(&self, id: ModelId) -> &Clustering {
        &self.clusterings[id.index()]
    }

    pub fn id_of(&self, c: &Clustering) -> ModelId {
        ModelId(self.index[c])
    }

    pub fn all_models(&self) -> Vec<ModelId> {
        (0..self.clusterings.len()).map(ModelId).collect()
    }

    fn edges_of(&self, c: &Clustering) -> Vec<(Clustering, u64)> {
        match self.mode {
            FeedbackMode::Unspecified => uc_feedback_edges(c),
            FeedbackMode::Specified => gc_feedback_edges(c),
        }
    }

    /// The same space as an explicit graph (feedback edges only; the
    /// specified mode is undirected because split and merge mirror each
    /// other with equal lengths).
    pub fn explicit_graph(&self) -> FeedbackGraph {
        let directed = self.is_directed();
        let mut g = FeedbackGraph::new(self.clusterings.len(), directed);
        for (i, c) in self.clusterings.iter().enumerate() {
            for (nb, w) in self.edges_of(c) {
                g.add_edge(ModelId(i), self.id_of(&nb), w, true);
            }
        }
        g
    }
}

/// A simulated user for either feedback mode: correct responses are the
/// feedback edges on shortest paths to `target` (uniformly chosen), wrong
/// ones follow `noise`. In unspecified mode a user's "split this cluster"
/// is the break-into-singletons edge.
pub fn clustering_oracle<'a>(
    space: &'a ClusteringSpace,
    target: ModelId,
    p: f64,
    noise: NoiseModel,
    rng: ChaCha8Rng,
) -> SimulatedUser<'a, ClusteringSpace> {
    SimulatedUser::new(space, target, p, noise, ValidChoice::UniformValid, rng)
}

impl DomainAdapter for ClusteringSpace {
    fn model_count(&self) -> usize {
        self.clusterings.len()
    }

    fn is_directed(&self) -> bool {
        self.mode == FeedbackMode::Unspecified
    }

    fn feedback_edges(&self, s: ModelId) -> Vec<(ModelId, u64)> {
        self.edges_of(self.clustering(s))
            .into_iter()
            .map(|(c, w)| (self.id_of(&c), w))
            .collect()
    }

    fn distance(&self, s: ModelId, t: ModelId) -> u64 {
        let a = self.clustering(s);
        let b = self.clustering(t);
        match self.mode {
            FeedbackMode::Unspecified => uc_distance(a, b),
            FeedbackMode::Specified => gc_distance(a, b),
        }
    }
}
