//! The capability a concrete model family must supply to run the learners.

use crate::graph::{ModelId, INFINITE};

/// A (possibly implicit) model space with feedback-graph structure.
///
/// Implementations either wrap an explicit [`crate::explicit::ExplicitDomain`]
/// or compute edges and distances in closed form (permutations, clusterings,
/// label vectors). Models are addressed by dense or encoded [`ModelId`]s.
pub trait DomainAdapter {
    /// Number of models in the space (ids are `0..model_count()`).
    fn model_count(&self) -> usize;

    /// Whether the feedback graph is directed.
    fn is_directed(&self) -> bool;

    /// Outgoing feedback edges of `s` as `(neighbor, length)` pairs, i.e.
    /// the legal non-confirmation responses to a query of `s`.
    fn feedback_edges(&self, s: ModelId) -> Vec<(ModelId, u64)>;

    /// Shortest-path distance from `s` to `t` under the edge lengths.
    fn distance(&self, s: ModelId, t: ModelId) -> u64;

    /// Whether `cand` is consistent with a response of `fb` (a feedback
    /// neighbor of `s` at edge length `edge_len`) to a query of `s`:
    /// the edge must lie on a shortest path from `s` to `cand`. A response
    /// of `s` itself (a confirmation) is consistent only with `s`.
    fn reach_contains(&self, s: ModelId, fb: ModelId, edge_len: u64, cand: ModelId) -> bool {
        if fb == s {
            return cand == s;
        }
        let tail = self.distance(fb, cand);
        tail != INFINITE && self.distance(s, cand) == edge_len + tail
    }

    /// Length of the feedback edge `(s, fb)`, if it exists.
    fn feedback_edge_len(&self, s: ModelId, fb: ModelId) -> Option<u64> {
        self.feedback_edges(s)
            .into_iter()
            .find(|&(t, _)| t == fb)
            .map(|(_, w)| w)
    }
}
