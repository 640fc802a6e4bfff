//! Exact Γ-argmin over permutations via the pairwise decomposition of
//! Kendall τ: the weighted distance from a candidate ranking to a
//! distribution over rankings splits into independent per-pair penalties,
//! so the global argmin over all `n!` rankings reduces to a `O(2ⁿ·n²)`
//! subset dynamic program instead of an `n!` scan.

use eqgraph_core::{MedianSelector, ModelId};
use rand_chacha::ChaCha8Rng;

use crate::constraints::PartialOrderConstraints;
use crate::domains::AdjacentSwapDomain;
use crate::perm::Permutation;

/// `n × n` row-major pair penalties: `cost[a * n + b]` is the total weight
/// of rankings that place `a` before `b` (so a candidate placing `b` before
/// `a` pays it).
pub fn pair_costs(n: usize, rankings: &[Permutation], weights: &[f64]) -> Vec<f64> {
    assert_eq!(rankings.len(), weights.len());
    let mut cost = vec![0.0; n * n];
    for (p, &w) in rankings.iter().zip(weights) {
        if w == 0.0 {
            continue;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                cost[p.item_at(i) * n + p.item_at(j)] += w;
            }
        }
    }
    cost
}

/// Like [`pair_costs`] but for a support given by Lehmer ids.
pub fn pair_costs_from_ids(n: usize, support: &[ModelId], weights: &[f64]) -> Vec<f64> {
    let rankings: Vec<Permutation> = support
        .iter()
        .map(|&id| Permutation::from_lehmer(id, n))
        .collect();
    pair_costs(n, &rankings, weights)
}

/// Weighted Kendall-τ cost of `candidate` under the pair penalties.
pub fn gamma_of(n: usize, cost: &[f64], candidate: &Permutation) -> f64 {
    let mut total = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            total += cost[candidate.item_at(j) * n + candidate.item_at(i)];
        }
    }
    total
}

/// The ranking minimizing the weighted Kendall-τ cost, over all `n!`
/// rankings, or over the linear extensions of `restrict` when given.
/// Deterministic: among minimizers it returns the one built by placing the
/// smallest admissible label first at every step.
pub fn gamma_argmin_pairs(
    n: usize,
    cost: &[f64],
    restrict: Option<&PartialOrderConstraints>,
) -> Permutation {
    assert!(n >= 1 && n <= 24, "subset DP is for small n");
    assert_eq!(cost.len(), n * n);
    let pred: Vec<u64> = match restrict {
        Some(c) => {
            assert_eq!(c.n(), n);
            c.predecessor_masks()
        }
        None => vec![0; n],
    };
    let full: u64 = (1u64 << n) - 1;
    let size = 1usize << n;

    // penalty[e][mask]: cost of placing `e` before every element of `mask`.
    let mut penalty = vec![0.0f64; n * size];
    for e in 0..n {
        let row = &mut penalty[e * size..(e + 1) * size];
        for mask in 1..=full {
            let low = mask.trailing_zeros() as usize;
            row[mask as usize] = row[(mask & (mask - 1)) as usize] + cost[low * n + e];
        }
    }

    // dp[mask]: minimum cost of ordering `mask` as the tail of the ranking,
    // all other labels already placed earlier.
    let mut dp = vec![f64::INFINITY; size];
    dp[0] = 0.0;
    for mask in 1..=full {
        let placed = full ^ mask;
        let mut best = f64::INFINITY;
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if pred[e] & !placed & full != 0 {
                continue;
            }
            let sub = mask ^ (1 << e);
            let v = penalty[e * size + sub as usize] + dp[sub as usize];
            if v < best {
                best = v;
            }
        }
        dp[mask as usize] = best;
    }
    assert!(
        dp[full as usize].is_finite(),
        "constraints admit no extension"
    );

    // Reconstruct, preferring the smallest admissible label at each step.
    let mut items = Vec::with_capacity(n);
    let mut mask = full;
    while mask != 0 {
        let placed = full ^ mask;
        let mut rest = mask;
        let mut chosen = None;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if pred[e] & !placed & full != 0 {
                continue;
            }
            let sub = mask ^ (1 << e);
            if penalty[e * size + sub as usize] + dp[sub as usize] == dp[mask as usize] {
                chosen = Some(e);
                break;
            }
        }
        let e = chosen.expect("dp value must be achieved by some label");
        items.push(e);
        mask ^= 1 << e;
    }
    Permutation::from_items(items).unwrap()
}

/// Exact median strategy for the adjacent-swap ranking space: builds pair
/// penalties from the weighted support and returns the global Γ-argmin.
/// Equivalent to the generic exhaustive Γ scan but usable at `n` where the
/// `n!` scan is not.
pub struct PairDecompositionMedian;

impl MedianSelector<AdjacentSwapDomain> for PairDecompositionMedian {
    fn select(
        &mut self,
        adapter: &AdjacentSwapDomain,
        support: &[ModelId],
        weights: &[f64],
        _rng: &mut ChaCha8Rng,
    ) -> ModelId {
        let n = adapter.n();
        let cost = pair_costs_from_ids(n, support, weights);
        gamma_argmin_pairs(n, &cost, None).lehmer_rank()
    }
}
