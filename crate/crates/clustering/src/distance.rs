//! Closed-form distances and response repertoires for the two clustering
//! feedback models.
//!
//! Merge-or-unspecified-split feedback induces a *directed* graph: merging
//! two clusters costs 2, breaking a cluster into singletons costs 1, and
//! the shortest-path distance has the closed form `2y − x + 2(k − k′)`
//! where `x` counts clusters of the source that mix several clusters of
//! the destination and `y` counts the items inside them.
//!
//! Specified-split feedback induces an *undirected* graph: every two-way
//! split (and the reverse merge) of clusters of sizes `a`, `b` costs
//! `2ab`, and the distance is the Hamming distance between the `n × n`
//! co-clustering matrices.

use crate::partition::Clustering;

/// Shortest-path distance from `c` to `t` under merge/unspecified-split
/// feedback (asymmetric).
pub fn uc_distance(c: &Clustering, t: &Clustering) -> u64 {
    assert_eq!(c.n(), t.n(), "clusterings over different item sets");
    let owner_t = t.block_of_items();
    let mut x = 0u64; // mixed clusters of c
    let mut y = 0u64; // items inside them
    for block in c.blocks() {
        let first = owner_t[block[0]];
        if block.iter().any(|&v| owner_t[v] != first) {
            x += 1;
            y += block.len() as u64;
        }
    }
    let k = c.cluster_count() as i64;
    let kp = t.cluster_count() as i64;
    let d = 2 * y as i64 - x as i64 + 2 * (k - kp);
    debug_assert!(d >= 0);
    d as u64
}

/// Responses available from `c` under merge/unspecified-split feedback:
/// every pairwise merge (length 2) and one break-into-singletons edge per
/// non-singleton cluster (length 1).
pub fn uc_feedback_edges(c: &Clustering) -> Vec<(Clustering, u64)> {
    let k = c.cluster_count();
    let mut out = Vec::new();
    for a in 0..k {
        for b in (a + 1)..k {
            out.push((c.merge(a, b), 2));
        }
    }
    for b in 0..k {
        if c.blocks()[b].len() > 1 {
            out.push((c.break_into_singletons(b), 1));
        }
    }
    out
}

/// Distance between `c` and `t` under specified-split feedback: the number
/// of ordered item pairs co-clustered in exactly one of the two (always
/// even, symmetric).
pub fn gc_distance(c: &Clustering, t: &Clustering) -> u64 {
    assert_eq!(c.n(), t.n(), "clusterings over different item sets");
    let a = c.block_of_items();
    let b = t.block_of_items();
    let n = c.n();
    let mut diff = 0u64;
    for i in 0..n {
        for j in 0..n {
            if i != j && ((a[i] == a[j]) != (b[i] == b[j])) {
                diff += 1;
            }
        }
    }
    diff
}

/// Responses available from `c` under specified-split feedback: every
/// two-way split of every cluster and every pairwise merge, each of length
/// `2ab` for part sizes `a`, `b`.
pub fn gc_feedback_edges(c: &Clustering) -> Vec<(Clustering, u64)> {
    let k = c.cluster_count();
    let mut out = Vec::new();
    for a in 0..k {
        for b in (a + 1)..k {
            let w = 2 * (c.blocks()[a].len() as u64) * (c.blocks()[b].len() as u64);
            out.push((c.merge(a, b), w));
        }
    }
    for b in 0..k {
        let size = c.blocks()[b].len();
        if size < 2 {
            continue;
        }
        // Each unordered two-way split once: fix the block's first element
        // in the left part.
        for mask in 0..(1u64 << (size - 1)) {
            let mask = (mask << 1) | 1;
            if mask == (1u64 << size) - 1 {
                continue;
            }
            let left = mask.count_ones() as u64;
            let right = size as u64 - left;
            out.push((c.split_block(b, mask), 2 * left * right));
        }
    }
    out
}
