//! Explicit feedback graphs: the object every learnable domain has to supply.
//!
//! A feedback graph has one node per candidate model and a directed edge
//! `(s, s')` for every response `s'` a user may give to a query of `s`.
//! Correct responses always lie on shortest paths to the target, which is the
//! single property all the learners in this crate rely on. Graphs may carry
//! extra non-feedback edges; those participate in distances but are never
//! legal responses.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::Error;

/// Index of a model (node) in a feedback graph. Dense `0..N` for explicit
/// domains; implicit domains use any injective encoding into `usize`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModelId(pub usize);

impl ModelId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for ModelId {
    fn from(i: usize) -> Self {
        ModelId(i)
    }
}

/// Distance value used for unreachable nodes.
pub const INFINITE: u64 = u64::MAX;

/// A single outgoing edge of a feedback graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub to: ModelId,
    /// Strictly positive edge length.
    pub len: u64,
    /// True when this edge corresponds to a legal user response from the
    /// source node (graphs may contain additional non-feedback edges).
    pub is_feedback: bool,
}

/// Node-indexed model space with directed weighted feedback edges.
#[derive(Debug, Clone)]
pub struct FeedbackGraph {
    directed: bool,
    adj: Vec<Vec<Edge>>,
}

impl FeedbackGraph {
    pub fn new(node_count: usize, directed: bool) -> Self {
        assert!(node_count > 0, "feedback graph needs at least one node");
        FeedbackGraph {
            directed,
            adj: vec![Vec::new(); node_count],
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Adds a single directed edge. Undirected graphs store both
    /// orientations explicitly; use [`add_undirected_edge`] for those.
    ///
    /// [`add_undirected_edge`]: FeedbackGraph::add_undirected_edge
    pub fn add_edge(&mut self, from: ModelId, to: ModelId, len: u64, is_feedback: bool) {
        assert!(len > 0, "edge lengths must be strictly positive");
        assert!(from.index() < self.adj.len() && to.index() < self.adj.len());
        self.adj[from.index()].push(Edge { to, len, is_feedback });
    }

    /// Adds both orientations with equal length; both are feedback edges.
    pub fn add_undirected_edge(&mut self, a: ModelId, b: ModelId, len: u64) {
        assert!(!self.directed, "undirected edge on a directed graph");
        self.add_edge(a, b, len, true);
        self.add_edge(b, a, len, true);
    }

    pub fn edges(&self, s: ModelId) -> &[Edge] {
        &self.adj[s.index()]
    }

    pub fn feedback_edges(&self, s: ModelId) -> impl Iterator<Item = &Edge> {
        self.adj[s.index()].iter().filter(|e| e.is_feedback)
    }

    /// Looks up the feedback edge `(s, to)`, if any.
    pub fn feedback_edge(&self, s: ModelId, to: ModelId) -> Option<&Edge> {
        self.adj[s.index()]
            .iter()
            .find(|e| e.is_feedback && e.to == to)
    }

    /// Single-source shortest-path lengths under the edge lengths
    /// (Dijkstra). Unreachable nodes are marked [`INFINITE`].
    pub fn distances_from(&self, s: ModelId) -> Vec<u64> {
        let n = self.adj.len();
        let mut dist = vec![INFINITE; n];
        let mut heap = BinaryHeap::new();
        dist[s.index()] = 0;
        heap.push(Reverse((0u64, s.index())));
        while let Some(Reverse((d, v))) = heap.pop() {
            if d > dist[v] {
                continue;
            }
            for e in &self.adj[v] {
                let nd = d + e.len;
                if nd < dist[e.to.index()] {
                    dist[e.to.index()] = nd;
                    heap.push(Reverse((nd, e.to.index())));
                }
            }
        }
        dist
    }

    /// The set of models consistent with a response of `fb` to a query of
    /// `s`: `{s}` when `fb == s`, otherwise every model whose shortest path
    /// from `s` passes through the feedback edge `(s, fb)`.
    pub fn reach_set(&self, s: ModelId, fb: ModelId) -> Result<Vec<ModelId>, Error> {
        if fb == s {
            return Ok(vec![s]);
        }
        let edge = self
            .feedback_edge(s, fb)
            .ok_or(Error::NotAFeedbackEdge { from: s, to: fb })?;
        let w = edge.len;
        let from_s = self.distances_from(s);
        let from_fb = self.distances_from(fb);
        Ok((0..self.node_count())
            .filter(|&i| {
                from_fb[i] != INFINITE && from_s[i] == w + from_fb[i]
            })
            .map(ModelId)
            .collect())
    }

    /// Checks the Definition-1 cycle condition by brute force: every feedback
    /// edge `e` must lie on a cycle of total length at most `c * len(e)`.
    /// Intended for small instances only.
    pub fn check_cycle_ratio(&self, c: u64) -> bool {
        for v in 0..self.node_count() {
            for e in self.feedback_edges(ModelId(v)) {
                let back = self.distances_from(e.to);
                let ret = back[v];
                if ret == INFINITE || e.len + ret > c * e.len {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 6-cycle: the bubble-sort graph for n = 3.
    fn hexagon() -> FeedbackGraph {
        let mut g = FeedbackGraph::new(6, false);
        for i in 0..6 {
            g.add_undirected_edge(ModelId(i), ModelId((i + 1) % 6), 1);
        }
        g
    }

    #[test]
    fn hexagon_antipode_distance() {
        let g = hexagon();
        let d = g.distances_from(ModelId(0));
        assert_eq!(d[3], 3);
        assert_eq!(d[0], 0);
    }

    #[test]
    fn hypercube_distance_is_hamming() {
        // 3-cube on ids 0..8, bit-flip edges.
        let mut g = FeedbackGraph::new(8, false);
        for v in 0..8usize {
            for b in 0..3 {
                let u = v ^ (1 << b);
                if u > v {
                    g.add_undirected_edge(ModelId(v), ModelId(u), 1);
                }
            }
        }
        let d = g.distances_from(ModelId(0b000));
        assert_eq!(d[0b111], 3);
    }

    #[test]
    fn hexagon_reach_of_neighbor_is_half() {
        let g = hexagon();
        // Responding "1" to a query of "0" keeps the 3 nodes on that side.
        let r = g.reach_set(ModelId(0), ModelId(1)).unwrap();
        assert_eq!(r, vec![ModelId(1), ModelId(2), ModelId(3)]);
    }

    #[test]
    fn reach_of_self_is_singleton() {
        let g = hexagon();
        assert_eq!(g.reach_set(ModelId(2), ModelId(2)).unwrap(), vec![ModelId(2)]);
    }

    #[test]
    fn reach_rejects_non_edges() {
        let g = hexagon();
        assert!(g.reach_set(ModelId(0), ModelId(3)).is_err());
    }

    #[test]
    fn cycle_ratio_undirected_is_two() {
        let g = hexagon();
        assert!(g.check_cycle_ratio(2));
    }
}
