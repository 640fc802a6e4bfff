//! Hyperplane classifiers over a finite point set and enumeration of every
//! linearly realizable labeling.
//!
//! Sign convention: a point exactly on the decision boundary gets label 1,
//! so label 1 means `a·x + b ≥ 0` and label 0 means `a·x + b < 0` (encoded
//! in the feasibility program as `a·x + b ≤ −1`, which scaling makes
//! equivalent).

use eqgraph_core::ModelId;

use crate::hypercube::HypercubeDomain;
use crate::lp::{LpProblem, LpResult, Relation};
use crate::points::PointSet;

/// A linear classifier together with the labeling it induces on the
/// point set it was built for.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperplaneConcept {
    pub normal: Vec<f64>,
    pub offset: f64,
    pub labels: Vec<bool>,
}

impl HyperplaneConcept {
    /// Builds a concept from a separator, deriving the induced labels.
    pub fn from_separator(points: &PointSet, normal: Vec<f64>, offset: f64) -> Self {
        assert_eq!(normal.len(), points.d());
        let labels = (0..points.len())
            .map(|i| side(&normal, offset, points.point(i)))
            .collect();
        HyperplaneConcept {
            normal,
            offset,
            labels,
        }
    }

    /// Label assigned to an arbitrary point (boundary → 1).
    pub fn classify(&self, x: &[f64]) -> bool {
        side(&self.normal, self.offset, x)
    }

    /// Packs the induced labeling into the hypercube `ModelId`.
    pub fn model_id(&self) -> ModelId {
        let dom = HypercubeDomain::new(self.labels.len());
        dom.id_of_labels(&self.labels)
    }
}

fn side(normal: &[f64], offset: f64, x: &[f64]) -> bool {
    let v: f64 = normal.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() + offset;
    v >= 0.0
}

/// Finds a hyperplane realizing `labels` over `points`, if one exists:
/// label 1 requires `a·x + b ≥ 0`, label 0 requires `a·x + b ≤ −1`
/// (feasible iff the labeling is realizable under the boundary-to-1
/// convention).
pub fn realizing_hyperplane(points: &PointSet, labels: &[bool]) -> Option<(Vec<f64>, f64)> {
    assert_eq!(labels.len(), points.len());
    let d = points.d();
    // Variables: a_0..a_{d−1}, b — all free, zero objective (pure
    // feasibility).
    let mut lp = LpProblem::new(d + 1);
    for (i, &label) in labels.iter().enumerate() {
        let mut coeffs: Vec<f64> = points.point(i).to_vec();
        coeffs.push(1.0);
        if label {
            lp.add_constraint(coeffs, Relation::Ge, 0.0);
        } else {
            lp.add_constraint(coeffs, Relation::Le, -1.0);
        }
    }
    match lp.solve() {
        LpResult::Optimal { x, .. } => {
            let (a, b) = x.split_at(d);
            Some((a.to_vec(), b[0]))
        }
        LpResult::Infeasible => None,
        LpResult::Unbounded => unreachable!("feasibility program has no objective"),
    }
}

/// Enumerates every linearly realizable labeling of `points`, each with a
/// witness hyperplane. Intended for desk scale (`n ≤ 12`, `d ≤ 3`).
pub fn enumerate_hyperplane_family(points: &PointSet) -> Vec<HyperplaneConcept> {
    let n = points.len();
    assert!(n <= 20, "family enumeration needs n ≤ 20, got {n}");
    let mut family = Vec::new();
    for mask in 0usize..(1 << n) {
        let labels: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        if let Some((normal, offset)) = realizing_hyperplane(points, &labels) {
            family.push(HyperplaneConcept {
                normal,
                offset,
                labels,
            });
        }
    }
    family
}

/// Upper bound on the number of realizable dichotomies of `n` points in
/// `R^d`: `2·Σ_{i ≤ d} C(n, i)`.
pub fn dichotomy_count_bound(n: usize, d: usize) -> usize {
    let mut sum = 0usize;
    for i in 0..=d.min(n) {
        sum += binomial(n, i);
    }
    2 * sum
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The family's hypercube ids, sorted ascending — the initial consistent
/// set / weight support for the learners.
pub fn family_support(family: &[HyperplaneConcept]) -> Vec<ModelId> {
    let mut ids: Vec<ModelId> = family.iter().map(HyperplaneConcept::model_id).collect();
    ids.sort_unstable();
    ids.dedup();
    ids
}
