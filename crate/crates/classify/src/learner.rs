//! Classification learners on the hypercube: the improper
//! family-restricted halving learner (any labeling may be queried) and the
//! proper hyperplane learner (every query is itself a realizable
//! classifier).

use eqgraph_core::{
    learn_noiseless, learn_noisy, Error, GammaMedian, ModelId, NoisySchedule, Oracle,
};
use rand_chacha::ChaCha8Rng;

use crate::family::{family_support, HyperplaneConcept};
use crate::hypercube::HypercubeDomain;
use crate::median::HyperplaneLpSelector;
use crate::points::PointSet;

/// Improper halving over the hypercube restricted to an arbitrary family
/// of labelings: queries the distance median of the consistent set (any
/// labeling, realizable or not) and needs at most `⌈log₂ M⌉` queries for a
/// family of size `M`.
pub fn learn_hypercube_restricted(
    n: usize,
    support: &[ModelId],
    oracle: &mut dyn Oracle,
    rng: &mut ChaCha8Rng,
) -> Result<(ModelId, usize), Error> {
    let dom = HypercubeDomain::new(n);
    let out = learn_noiseless(&dom, support, oracle, &mut GammaMedian, rng)?;
    Ok((out.model, out.queries))
}

/// Proper noiseless hyperplane learner: every query is the hyperplane
/// median of the consistent labelings, so at most a `(d+1)/(d+2)` fraction
/// survives each response and `⌈log_{(d+2)/(d+1)} M⌉` queries suffice for
/// a family of size `M`.
pub fn proper_hyperplane_learner(
    points: &PointSet,
    family: &[HyperplaneConcept],
    oracle: &mut dyn Oracle,
    rng: &mut ChaCha8Rng,
) -> Result<(HyperplaneConcept, usize), Error> {
    let dom = HypercubeDomain::new(points.len());
    let support = family_support(family);
    let mut selector = HyperplaneLpSelector::new(points.clone());
    let out = learn_noiseless(&dom, &support, oracle, &mut selector, rng)?;
    Ok((concept_for(points, family, out.model), out.queries))
}

/// Noise-tolerant proper hyperplane learner (response accuracy `p`,
/// failure probability at most `δ`, both fixed by `schedule`). Returns
/// `None` on the legal failure outcome.
pub fn proper_hyperplane_learner_noisy(
    points: &PointSet,
    family: &[HyperplaneConcept],
    schedule: &NoisySchedule,
    oracle: &mut dyn Oracle,
    rng: &mut ChaCha8Rng,
) -> Result<(Option<HyperplaneConcept>, usize), Error> {
    let dom = HypercubeDomain::new(points.len());
    let support = family_support(family);
    let mut selector = HyperplaneLpSelector::new(points.clone());
    let out = learn_noisy(&dom, &support, schedule, oracle, &mut selector, rng)?;
    Ok((
        out.model.map(|m| concept_for(points, family, m)),
        out.queries,
    ))
}

/// Number of noiseless queries the proper learner is guaranteed to stay
/// within for a family of size `m` in dimension `d`:
/// `⌈log_{(d+2)/(d+1)} m⌉`.
pub fn proper_query_bound(m: usize, d: usize) -> usize {
    if m <= 1 {
        return 0;
    }
    let base = (d as f64 + 2.0) / (d as f64 + 1.0);
    ((m as f64).ln() / base.ln()).ceil() as usize
}

fn concept_for(points: &PointSet, family: &[HyperplaneConcept], id: ModelId) -> HyperplaneConcept {
    family
        .iter()
        .find(|c| c.model_id() == id)
        .cloned()
        .unwrap_or_else(|| {
            // The learned labeling is consistent with every response; if it
            // is not one of the enumerated witnesses, re-derive one.
            let labels: Vec<bool> = (0..points.len()).map(|i| id.index() >> i & 1 == 1).collect();
            let (normal, offset) = crate::family::realizing_hyperplane(points, &labels)
                .expect("learned labeling must be realizable");
            HyperplaneConcept {
                normal,
                offset,
                labels,
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::enumerate_hyperplane_family;
    use eqgraph_core::{NoiseModel, SimulatedUser, ValidChoice};
    use rand::SeedableRng;

    #[test]
    fn restricted_halving_meets_the_log_bound() {
        // 8 collinear points, d = 1: threshold classifiers.
        let ps = PointSet::new(1, (0..8).map(|i| vec![i as f64]).collect()).unwrap();
        let family = enumerate_hyperplane_family(&ps);
        let support = family_support(&family);
        let m = support.len();
        let bound = (m as f64).log2().ceil() as usize;
        let dom = HypercubeDomain::new(8);
        for &target in &support {
            let mut oracle = SimulatedUser::new(
                &dom,
                target,
                1.0,
                NoiseModel::Uniform,
                ValidChoice::AdversarialValid,
                ChaCha8Rng::seed_from_u64(target.index() as u64),
            );
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            let (model, queries) =
                learn_hypercube_restricted(8, &support, &mut oracle, &mut rng).unwrap();
            assert_eq!(model, target);
            assert!(queries <= bound, "{queries} > {bound}");
        }
    }

    #[test]
    fn singleton_family_needs_no_queries() {
        assert_eq!(proper_query_bound(1, 2), 0);
        let ps = PointSet::new(1, vec![vec![0.0]]).unwrap();
        let family = vec![HyperplaneConcept::from_separator(&ps, vec![0.0], 1.0)];
        let dom = HypercubeDomain::new(1);
        let mut oracle = SimulatedUser::new(
            &dom,
            family[0].model_id(),
            1.0,
            NoiseModel::Uniform,
            ValidChoice::UniformValid,
            ChaCha8Rng::seed_from_u64(0),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let (_, queries) =
            proper_hyperplane_learner(&ps, &family, &mut oracle, &mut rng).unwrap();
        assert_eq!(queries, 0);
    }

    #[test]
    fn query_bound_formula() {
        // log_{4/3} 58 ≈ 14.11 → 15.
        assert_eq!(proper_query_bound(58, 2), 15);
        // log_{3/2} 2 ≈ 1.71 → 2.
        assert_eq!(proper_query_bound(2, 1), 2);
    }
}
