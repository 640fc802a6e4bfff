//! Partitions of items `0..n−1` into non-empty clusters, with a canonical
//! representation (each block sorted, blocks ordered by minimum element)
//! so clusterings can be hashed, compared, and densely indexed.

use std::collections::HashMap;

/// A partition of the items `0..n−1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clustering {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Clustering {
    /// Builds the canonical form. Fails if blocks are empty, overlap, or do
    /// not cover `0..n−1`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut seen = vec![false; n];
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return None;
            }
            b.sort_unstable();
            for &x in &b {
                if x >= n || seen[x] {
                    return None;
                }
                seen[x] = true;
            }
            canon.push(b);
        }
        if !seen.into_iter().all(|s| s) {
            return None;
        }
        canon.sort_by_key(|b| b[0]);
        Some(Clustering { n, blocks: canon })
    }

    /// One cluster per item.
    pub fn singletons(n: usize) -> Self {
        Clustering {
            n,
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// A single cluster holding every item.
    pub fn one_cluster(n: usize) -> Self {
        assert!(n > 0);
        Clustering {
            n,
            blocks: vec![(0..n).collect()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn cluster_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing each item.
    pub fn block_of_items(&self) -> Vec<usize> {
        let mut owner = vec![0usize; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                owner[x] = b;
            }
        }
        owner
    }

    /// Whether `i` and `j` share a cluster.
    pub fn same_cluster(&self, i: usize, j: usize) -> bool {
        let owner = self.block_of_items();
        owner[i] == owner[j]
    }

    /// The clustering with blocks `a` and `b` merged.
    pub fn merge(&self, a: usize, b: usize) -> Clustering {
        assert!(a != b && a < self.blocks.len() && b < self.blocks.len());
        let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(self.blocks.len() - 1);
        let mut merged = self.blocks[a].clone();
        merged.extend_from_slice(&self.blocks[b]);
        for (i, blk) in self.blocks.iter().enumerate() {
            if i != a && i != b {
                blocks.push(blk.clone());
            }
        }
        blocks.push(merged);
        Clustering::new(self.n, blocks).unwrap()
    }

    /// The clustering with block `b` broken into singletons.
    pub fn break_into_singletons(&self, b: usize) -> Clustering {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, blk) in self.blocks.iter().enumerate() {
            if i == b {
                blocks.extend(blk.iter().map(|&x| vec![x]));
            } else {
                blocks.push(blk.clone());
            }
        }
        Clustering::new(self.n, blocks).unwrap()
    }

    /// The clustering with block `b` replaced by the two parts selected by
    /// `mask`: bit `i` of `mask` sends the i-th element of the block to the
    /// first part. `mask` must select a proper non-empty subset.
    pub fn split_block(&self, b: usize, mask: u64) -> Clustering {
        let block = &self.blocks[b];
        assert!(mask > 0 && mask < (1u64 << block.len()) - 1);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, &x) in block.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(x);
            } else {
                right.push(x);
            }
        }
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != b)
            .map(|(_, blk)| blk.clone())
            .collect();
        blocks.push(left);
        blocks.push(right);
        Clustering::new(self.n, blocks).unwrap()
    }
}

/// All partitions of `0..n−1`, enumerated by restricted-growth strings in
/// lexicographic order (so indices are stable across runs). `Bell(n)`
/// entries.
pub fn enumerate_partitions(n: usize) -> Vec<Clustering> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn recurse(rgs: &mut Vec<usize>, pos: usize, max_used: usize, out: &mut Vec<Clustering>) {
        let n = rgs.len();
        if pos == n {
            let k = max_used + 1;
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
            for (i, &b) in rgs.iter().enumerate() {
                blocks[b].push(i);
            }
            out.push(Clustering::new(n, blocks).unwrap());
            return;
        }
        for b in 0..=max_used + 1 {
            rgs[pos] = b;
            recurse(rgs, pos + 1, max_used.max(b), out);
        }
    }
    // Item 0 always opens block 0.
    recurse(&mut rgs, 1, 0, &mut out);
    out
}

/// Dense index over the canonical partitions of `0..n−1`.
pub fn partition_index(partitions: &[Clustering]) -> HashMap<Clustering, usize> {
    partitions
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect()
}
