//! Ranking model spaces over all `n!` permutations.
//!
//! Two response repertoires are supported. In the adjacent-swap space a
//! user flags one adjacent pair that is in the wrong order; edges are unit
//! length and the induced distance is Kendall τ. In the block-move space a
//! user drags the `i`-th result up to position `j < i`; the move has length
//! `i − j` (the number of pairs it fixes), the reverse drags are present in
//! the graph but are not legal responses, and the induced distance is
//! again Kendall τ.
//!
//! Both spaces address permutations by Lehmer rank, so they stay implicit
//! (no `n!` adjacency lists) and work up to `n = 20`. Explicit
//! [`FeedbackGraph`] builders are provided for small-`n` cross-checks.

use eqgraph_core::{DomainAdapter, FeedbackGraph, ModelId};

use crate::perm::{factorial, Permutation};

/// Permutation space with adjacent-transposition responses.
#[derive(Debug, Clone)]
pub struct AdjacentSwapDomain {
    n: usize,
}

impl AdjacentSwapDomain {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1 && n <= 20);
        AdjacentSwapDomain { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl DomainAdapter for AdjacentSwapDomain {
    fn model_count(&self) -> usize {
        factorial(self.n)
    }

    fn is_directed(&self) -> bool {
        false
    }

    fn feedback_edges(&self, s: ModelId) -> Vec<(ModelId, u64)> {
        let p = Permutation::from_lehmer(s, self.n);
        (0..self.n.saturating_sub(1))
            .map(|k| (p.swap_adjacent(k).lehmer_rank(), 1))
            .collect()
    }

    fn distance(&self, s: ModelId, t: ModelId) -> u64 {
        Permutation::from_lehmer(s, self.n).kendall_tau(&Permutation::from_lehmer(t, self.n))
    }

    fn reach_contains(&self, s: ModelId, fb: ModelId, _edge_len: u64, cand: ModelId) -> bool {
        if fb == s {
            return cand == s;
        }
        let query = Permutation::from_lehmer(s, self.n);
        let resp = Permutation::from_lehmer(fb, self.n);
        // The response swapped exactly one adjacent pair; a candidate is
        // consistent iff it orders that pair the way the response does.
        let k = (0..self.n - 1)
            .find(|&k| query.item_at(k) != resp.item_at(k))
            .expect("response equals query but ids differ");
        let early = resp.item_at(k);
        let late = resp.item_at(k + 1);
        let pos = Permutation::from_lehmer(cand, self.n).positions();
        pos[early] < pos[late]
    }
}

/// Permutation space with block-move responses ("drag the `i`-th item up
/// to position `j`"), edge length `i − j`.
#[derive(Debug, Clone)]
pub struct BlockMoveDomain {
    n: usize,
}

impl BlockMoveDomain {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1 && n <= 20);
        BlockMoveDomain { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl DomainAdapter for BlockMoveDomain {
    fn model_count(&self) -> usize {
        factorial(self.n)
    }

    fn is_directed(&self) -> bool {
        false
    }

    fn feedback_edges(&self, s: ModelId) -> Vec<(ModelId, u64)> {
        let p = Permutation::from_lehmer(s, self.n);
        let mut out = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for i in 1..self.n {
            for j in 0..i {
                out.push((p.shift(i, j).lehmer_rank(), (i - j) as u64));
            }
        }
        out
    }

    fn distance(&self, s: ModelId, t: ModelId) -> u64 {
        Permutation::from_lehmer(s, self.n).kendall_tau(&Permutation::from_lehmer(t, self.n))
    }

    fn reach_contains(&self, s: ModelId, fb: ModelId, edge_len: u64, cand: ModelId) -> bool {
        if fb == s {
            return cand == s;
        }
        // A length-w move fixes exactly w pairs, so the edge lies on a
        // shortest path iff the candidate agrees with the response on all
        // of them: the moved element must precede everything it jumped.
        let query = Permutation::from_lehmer(s, self.n);
        let resp = Permutation::from_lehmer(fb, self.n);
        let j = (0..self.n)
            .find(|&k| query.item_at(k) != resp.item_at(k))
            .expect("response equals query but ids differ");
        let moved = resp.item_at(j);
        let i = j + edge_len as usize;
        debug_assert_eq!(query.item_at(i), moved);
        let pos = Permutation::from_lehmer(cand, self.n).positions();
        (j..i).all(|k| pos[moved] < pos[query.item_at(k)])
    }
}

/// Explicit adjacent-swap graph on Lehmer ids (small `n`).
pub fn adjacent_swap_graph(n: usize) -> FeedbackGraph {
    let perms = Permutation::enumerate(n);
    let mut g = FeedbackGraph::new(perms.len(), false);
    for p in &perms {
        let s = p.lehmer_rank();
        for k in 0..n.saturating_sub(1) {
            let t = p.swap_adjacent(k).lehmer_rank();
            if s < t {
                g.add_undirected_edge(s, t, 1);
            }
        }
    }
    g
}

/// Explicit block-move graph on Lehmer ids (small `n`). Forward moves are
/// feedback edges; the reverse orientations are non-feedback edges, so the
/// graph is metrically undirected but only forward moves are responses.
pub fn block_move_graph(n: usize) -> FeedbackGraph {
    let perms = Permutation::enumerate(n);
    let mut g = FeedbackGraph::new(perms.len(), false);
    for p in &perms {
        let s = p.lehmer_rank();
        for i in 1..n {
            for j in 0..i {
                let t = p.shift(i, j).lehmer_rank();
                let w = (i - j) as u64;
                g.add_edge(s, t, w, true);
                g.add_edge(t, s, w, false);
            }
        }
    }
    g
}
