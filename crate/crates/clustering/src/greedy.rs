//! Greedy bottom-up median for merge/unspecified-split feedback: starting
//! from singletons, merge any two clusters whose union is co-clustered in
//! strictly more than half of the weight. The result always has potential
//! Φ ≤ ½: no further merge clears the bar, and any cluster ever formed
//! keeps majority support against splits.

use eqgraph_core::{MedianSelector, ModelId};
use rand_chacha::ChaCha8Rng;

use crate::partition::Clustering;
use crate::space::ClusteringSpace;

/// Weight of the clusterings that put every item of `items` in a single
/// cluster.
fn co_cluster_weight(items: &[usize], clusterings: &[Clustering], weights: &[f64]) -> f64 {
    clusterings
        .iter()
        .zip(weights)
        .filter(|(c, _)| {
            let owner = c.block_of_items();
            let first = owner[items[0]];
            items.iter().all(|&v| owner[v] == first)
        })
        .map(|(_, &w)| w)
        .sum()
}

/// Greedy median over an explicit weighted set of clusterings. Weights
/// need not be normalized; "more than half" is relative to their total.
/// Deterministic: the first qualifying pair in canonical block order is
/// merged each round.
pub fn greedy_uc_median(n: usize, clusterings: &[Clustering], weights: &[f64]) -> Clustering {
    assert_eq!(clusterings.len(), weights.len());
    let total: f64 = weights.iter().sum();
    assert!(total > 0.0, "weights must not all be zero");
    let half = total / 2.0;
    let mut current = Clustering::singletons(n);
    'outer: loop {
        let k = current.cluster_count();
        for a in 0..k {
            for b in (a + 1)..k {
                let mut union = current.blocks()[a].clone();
                union.extend_from_slice(&current.blocks()[b]);
                if co_cluster_weight(&union, clusterings, weights) > half {
                    current = current.merge(a, b);
                    continue 'outer;
                }
            }
        }
        return current;
    }
}

/// Median strategy plugging the greedy procedure into the generic learners
/// over a [`ClusteringSpace`].
pub struct GreedyClusteringMedian;

impl MedianSelector<ClusteringSpace> for GreedyClusteringMedian {
    fn select(
        &mut self,
        adapter: &ClusteringSpace,
        support: &[ModelId],
        weights: &[f64],
        _rng: &mut ChaCha8Rng,
    ) -> ModelId {
        let clusterings: Vec<Clustering> = support
            .iter()
            .map(|&id| adapter.clustering(id).clone())
            .collect();
        adapter.id_of(&greedy_uc_median(adapter.n(), &clusterings, weights))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;
    use crate::space::FeedbackMode;
    use eqgraph_core::potential;

    #[test]
    fn point_mass_returns_its_atom() {
        let parts = enumerate_partitions(4);
        for target in &parts {
            let weights: Vec<f64> = parts.iter().map(|c| if c == target { 1.0 } else { 0.0 }).collect();
            assert_eq!(&greedy_uc_median(4, &parts, &weights), target);
        }
    }

    #[test]
    fn uniform_weight_has_half_potential() {
        let space = ClusteringSpace::new(3, FeedbackMode::Unspecified);
        let parts = enumerate_partitions(3);
        let weights = vec![1.0 / parts.len() as f64; parts.len()];
        let median = greedy_uc_median(3, &parts, &weights);
        let id = space.id_of(&median);
        let support = space.all_models();
        let phi = potential(&space, &support, &weights, id).unwrap();
        assert!(phi <= 0.5 + 1e-12, "phi = {phi}");
    }

    #[test]
    fn two_equal_atoms_stay_below_half() {
        let space = ClusteringSpace::new(4, FeedbackMode::Unspecified);
        let parts = enumerate_partitions(4);
        let mut weights = vec![0.0; parts.len()];
        weights[3] = 0.5;
        weights[11] = 0.5;
        let median = greedy_uc_median(4, &parts, &weights);
        let phi = potential(&space, &space.all_models(), &weights, space.id_of(&median)).unwrap();
        assert!(phi <= 0.5 + 1e-12, "phi = {phi}");
    }

    #[test]
    fn random_weights_never_exceed_half() {
        let space = ClusteringSpace::new(4, FeedbackMode::Unspecified);
        let parts = enumerate_partitions(4);
        let support = space.all_models();
        let mut seed = 1u64;
        for _ in 0..200 {
            let weights: Vec<f64> = (0..parts.len())
                .map(|_| {
                    seed = seed
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    ((seed >> 33) as f64 / (1u64 << 31) as f64) + 1e-3
                })
                .collect();
            let median = greedy_uc_median(4, &parts, &weights);
            let total: f64 = weights.iter().sum();
            let normalized: Vec<f64> = weights.iter().map(|w| w / total).collect();
            let phi =
                potential(&space, &support, &normalized, space.id_of(&median)).unwrap();
            assert!(phi <= 0.5 + 1e-12, "phi = {phi}");
        }
    }
}
