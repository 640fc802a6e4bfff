//! The trivial specified-split baseline: query the single all-items
//! cluster and apply every split the user proposes. With correct feedback
//! a target of k clusters is reached after exactly k − 1 split responses,
//! since each correct split from a coarsening of the target separates two
//! groups the target keeps apart.

use eqgraph_core::{ModelId, Oracle};

use crate::partition::Clustering;
use crate::space::{ClusteringSpace, FeedbackMode};

/// Outcome of the baseline run.
#[derive(Debug, Clone)]
pub struct BaselineOutcome {
    pub clustering: Clustering,
    /// Non-confirmation responses consumed (k − 1 under correct feedback).
    pub responses: usize,
}

/// Runs the split-accepting baseline against `oracle` over a
/// specified-split space. Panics if the space is not in specified mode.
pub fn trivial_split_learner(
    space: &ClusteringSpace,
    oracle: &mut dyn Oracle,
    max_responses: usize,
) -> Option<BaselineOutcome> {
    assert_eq!(space.mode(), FeedbackMode::Specified);
    let mut current = space.id_of(&Clustering::one_cluster(space.n()));
    let support: Vec<ModelId> = space.all_models();
    let weights = vec![1.0 / support.len() as f64; support.len()];
    let mut responses = 0usize;
    loop {
        let fb = oracle.respond(current, &support, &weights);
        if fb == current {
            return Some(BaselineOutcome {
                clustering: space.clustering(current).clone(),
                responses,
            });
        }
        responses += 1;
        if responses > max_responses {
            return None;
        }
        current = fb;
    }
}
