//! The proper hyperplane median: given weights over hyperplane concepts,
//! returns a hyperplane classifier whose worst response keeps at most a
//! `(d+1)/(d+2)` fraction of the weight consistent.
//!
//! Construction: let `φ(x)` be the weighted average label of point `x`.
//! Points with `φ < 1/(d+2)` (set `P`, almost surely labeled 0) and points
//! with `φ > 1 − 1/(d+2)` (set `Q`, almost surely labeled 1) have disjoint
//! convex hulls, so a separating hyperplane labeled `P → 0`, `Q → 1`
//! exists. A correction on a `P`/`Q` point then keeps weight less than
//! `1/(d+2)`; a correction on any other point keeps at most `(d+1)/(d+2)`.

use eqgraph_core::{MedianSelector, ModelId};
use rand_chacha::ChaCha8Rng;

use crate::caratheodory::max_margin_separator;
use crate::family::HyperplaneConcept;
use crate::hypercube::HypercubeDomain;
use crate::points::PointSet;

/// Weighted average label per point: `φ(x_i) = Σ_s w(s)·label_s(x_i)`,
/// with the labelings given as hypercube ids and `weights` normalized
/// against their own sum.
pub fn average_labels(n_points: usize, support: &[ModelId], weights: &[f64]) -> Vec<f64> {
    assert_eq!(support.len(), weights.len());
    let total: f64 = weights.iter().sum();
    assert!(total > 0.0, "total weight must be positive");
    let mut phi = vec![0.0; n_points];
    for (&s, &w) in support.iter().zip(weights) {
        for (i, avg) in phi.iter_mut().enumerate() {
            if s.index() >> i & 1 == 1 {
                *avg += w;
            }
        }
    }
    for avg in phi.iter_mut() {
        *avg /= total;
    }
    phi
}

/// Separating hyperplane for the near-unanimous points, labeled
/// low-average → 0 and high-average → 1. `weights` are over `support`
/// (hypercube ids of concepts in the family).
///
/// Panics if the two point sets are not strictly separable — impossible
/// when every supported labeling is hyperplane-realizable.
pub fn hyperplane_median(
    points: &PointSet,
    support: &[ModelId],
    weights: &[f64],
) -> HyperplaneConcept {
    let d = points.d();
    let threshold = 1.0 / (d as f64 + 2.0);
    let phi = average_labels(points.len(), support, weights);
    let p_idx: Vec<usize> = (0..points.len()).filter(|&i| phi[i] < threshold).collect();
    let q_idx: Vec<usize> = (0..points.len())
        .filter(|&i| phi[i] > 1.0 - threshold)
        .collect();

    if q_idx.is_empty() {
        // No near-unanimous 1s: the all-zeros classifier never errs on a
        // near-unanimous point. (Also covers both sets empty.)
        return HyperplaneConcept::from_separator(points, vec![0.0; d], -1.0);
    }
    if p_idx.is_empty() {
        return HyperplaneConcept::from_separator(points, vec![0.0; d], 1.0);
    }

    let p_pts: Vec<Vec<f64>> = p_idx.iter().map(|&i| points.point(i).to_vec()).collect();
    let q_pts: Vec<Vec<f64>> = q_idx.iter().map(|&i| points.point(i).to_vec()).collect();
    let (normal, offset, _margin) = max_margin_separator(&p_pts, &q_pts, d)
        .expect("near-unanimous point sets must have disjoint convex hulls");
    let concept = HyperplaneConcept::from_separator(points, normal, offset);
    debug_assert!(p_idx.iter().all(|&i| !concept.labels[i]));
    debug_assert!(q_idx.iter().all(|&i| concept.labels[i]));
    concept
}

/// [`MedianSelector`] for the hypercube domain restricted to a hyperplane
/// family: queries the labeling induced by [`hyperplane_median`] — always
/// itself realizable, hence proper.
pub struct HyperplaneLpSelector {
    points: PointSet,
}

impl HyperplaneLpSelector {
    pub fn new(points: PointSet) -> Self {
        HyperplaneLpSelector { points }
    }
}

impl MedianSelector<HypercubeDomain> for HyperplaneLpSelector {
    fn select(
        &mut self,
        adapter: &HypercubeDomain,
        support: &[ModelId],
        weights: &[f64],
        _rng: &mut ChaCha8Rng,
    ) -> ModelId {
        assert_eq!(adapter.n(), self.points.len());
        hyperplane_median(&self.points, support, weights).model_id()
    }
}
