//! Explicit domains: a feedback graph together with its all-pairs
//! shortest-path matrix, giving O(1) distance and reach queries.

use crate::adapter::DomainAdapter;
use crate::graph::{FeedbackGraph, ModelId, INFINITE};

/// Marker for unreachable pairs in the packed distance matrix.
const UNREACHABLE: u32 = u32::MAX;

/// A fully enumerated model space backed by a distance matrix.
#[derive(Debug, Clone)]
pub struct ExplicitDomain {
    graph: FeedbackGraph,
    /// Row-major `n × n` distances; `dist[s*n + t] = d(s, t)`.
    dist: Vec<u32>,
}

impl ExplicitDomain {
    /// Builds the matrix by running Dijkstra from every node.
    pub fn from_graph(graph: FeedbackGraph) -> Self {
        let n = graph.node_count();
        let mut dist = vec![UNREACHABLE; n * n];
        for s in 0..n {
            let row = graph.distances_from(ModelId(s));
            for (t, &d) in row.iter().enumerate() {
                dist[s * n + t] = if d == INFINITE {
                    UNREACHABLE
                } else {
                    u32::try_from(d).expect("distance exceeds u32")
                };
            }
        }
        ExplicitDomain { graph, dist }
    }

    /// Builds the matrix from a closed-form distance function instead of
    /// Dijkstra; callers are expected to cross-check the formula against
    /// [`from_graph`](ExplicitDomain::from_graph) on small instances.
    pub fn from_closed_form(graph: FeedbackGraph, d: impl Fn(usize, usize) -> u64) -> Self {
        let n = graph.node_count();
        let mut dist = vec![UNREACHABLE; n * n];
        for s in 0..n {
            for t in 0..n {
                dist[s * n + t] = u32::try_from(d(s, t)).expect("distance exceeds u32");
            }
        }
        ExplicitDomain { graph, dist }
    }

    pub fn graph(&self) -> &FeedbackGraph {
        &self.graph
    }

    /// All model ids of the space, in order.
    pub fn all_models(&self) -> Vec<ModelId> {
        (0..self.graph.node_count()).map(ModelId).collect()
    }
}

impl DomainAdapter for ExplicitDomain {
    fn model_count(&self) -> usize {
        self.graph.node_count()
    }

    fn is_directed(&self) -> bool {
        self.graph.is_directed()
    }

    fn feedback_edges(&self, s: ModelId) -> Vec<(ModelId, u64)> {
        self.graph
            .feedback_edges(s)
            .map(|e| (e.to, e.len))
            .collect()
    }

    #[inline]
    fn distance(&self, s: ModelId, t: ModelId) -> u64 {
        let n = self.graph.node_count();
        let d = self.dist[s.index() * n + t.index()];
        if d == UNREACHABLE {
            INFINITE
        } else {
            u64::from(d)
        }
    }
}
