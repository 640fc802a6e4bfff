//! End-to-end checks for the classification domain: family enumeration,
//! hull-intersection certificates, median quality, and both learners.

use eqgraph_core::{
    potential, DomainAdapter, NoiseModel, NoisySchedule, SimulatedUser, ValidChoice,
};
use eqgraph_classify::{
    caratheodory_pair, dichotomy_count_bound, enumerate_hyperplane_family, family_support,
    hyperplane_median, proper_hyperplane_learner, proper_hyperplane_learner_noisy,
    proper_query_bound, HullRelation, HypercubeDomain, PointSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_points(d: usize, n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    (0..n)
        .map(|_| (0..d).map(|_| rng.random_range(-5.0..5.0)).collect())
        .collect()
}

#[test]
fn caratheodory_size_bound_on_random_instances() {
    // 500 random instances per dimension; on intersection the returned
    // subsets must obey |P′| + |Q′| ≤ d + 2 and their hulls must still
    // meet (re-verified by a second intersection run on the subsets).
    for d in 1..=3usize {
        let mut rng = ChaCha8Rng::seed_from_u64(42 + d as u64);
        let mut intersections = 0;
        for _ in 0..500 {
            let p = random_points(d, rng.random_range(1..=6), &mut rng);
            let q = random_points(d, rng.random_range(1..=6), &mut rng);
            match caratheodory_pair(&p, &q, d) {
                HullRelation::Intersecting {
                    p_indices,
                    q_indices,
                    point,
                } => {
                    intersections += 1;
                    assert!(
                        p_indices.len() + q_indices.len() <= d + 2,
                        "witness too large in d = {d}"
                    );
                    let p_sub: Vec<Vec<f64>> =
                        p_indices.iter().map(|&i| p[i].clone()).collect();
                    let q_sub: Vec<Vec<f64>> =
                        q_indices.iter().map(|&j| q[j].clone()).collect();
                    assert!(
                        matches!(
                            caratheodory_pair(&p_sub, &q_sub, d),
                            HullRelation::Intersecting { .. }
                        ),
                        "subset hulls no longer intersect in d = {d}"
                    );
                    assert!(point.iter().all(|v| v.is_finite()));
                }
                HullRelation::Disjoint {
                    normal,
                    offset,
                    margin,
                } => {
                    assert!(margin > 0.0);
                    let side = |x: &[f64]| {
                        normal.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() + offset
                    };
                    for x in &p {
                        assert!(side(x) <= -margin + 1e-6);
                    }
                    for x in &q {
                        assert!(side(x) >= margin - 1e-6);
                    }
                }
            }
        }
        assert!(intersections > 0, "no intersecting instance in d = {d}");
    }
}

#[test]
fn median_potential_stays_below_the_dimension_bound() {
    // d = 2, 6 random planar points, uniform and random weights: the
    // hyperplane median's exact potential never exceeds (d+1)/(d+2) = 3/4.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let points = PointSet::new(2, random_points(2, 6, &mut rng)).unwrap();
    let family = enumerate_hyperplane_family(&points);
    let support = family_support(&family);
    let dom = HypercubeDomain::new(points.len());
    for trial in 0..50 {
        let weights: Vec<f64> = if trial == 0 {
            vec![1.0; support.len()]
        } else {
            support.iter().map(|_| rng.random_range(0.01..1.0)).collect()
        };
        let median = hyperplane_median(&points, &support, &weights);
        let phi = potential(&dom, &support, &weights, median.model_id()).unwrap();
        assert!(phi <= 0.75 + 1e-9, "phi = {phi}");
    }
}

#[test]
fn median_weight_shrink_factors_per_point() {
    // On a correction of a near-unanimous point the consistent weight
    // shrinks to < 1/(d+2) of the total; on any other point to at most
    // (d+1)/(d+2).
    let d = 2usize;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let points = PointSet::new(d, random_points(d, 5, &mut rng)).unwrap();
    let family = enumerate_hyperplane_family(&points);
    let support = family_support(&family);
    let dom = HypercubeDomain::new(points.len());
    let threshold = 1.0 / (d as f64 + 2.0);
    for _ in 0..100 {
        let weights: Vec<f64> = support.iter().map(|_| rng.random_range(0.01..1.0)).collect();
        let total: f64 = weights.iter().sum();
        let phi = eqgraph_classify::average_labels(points.len(), &support, &weights);
        let median = hyperplane_median(&points, &support, &weights);
        let query = median.model_id();
        for (fb, len) in dom.feedback_edges(query) {
            let flipped_point = (query.index() ^ fb.index()).trailing_zeros() as usize;
            let surviving: f64 = support
                .iter()
                .zip(&weights)
                .filter(|&(&m, _)| dom.reach_contains(query, fb, len, m))
                .map(|(_, &w)| w)
                .sum();
            let fraction = surviving / total;
            let near_unanimous =
                phi[flipped_point] < threshold || phi[flipped_point] > 1.0 - threshold;
            if near_unanimous {
                assert!(
                    fraction <= threshold + 1e-9,
                    "point {flipped_point}: fraction {fraction} > {threshold}"
                );
            } else {
                assert!(
                    fraction <= 1.0 - threshold + 1e-9,
                    "point {flipped_point}: fraction {fraction}"
                );
            }
        }
    }
}

#[test]
fn proper_learner_meets_its_bound_for_all_targets() {
    // d = 2, n = 8 random points in general position; every family member
    // as target, adversarial valid responses.
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let points = loop {
        let ps = PointSet::new(2, random_points(2, 8, &mut rng)).unwrap();
        if ps.in_general_position() {
            break ps;
        }
    };
    let family = enumerate_hyperplane_family(&points);
    assert!(family.len() <= dichotomy_count_bound(points.len(), points.d()));
    let bound = proper_query_bound(family.len(), points.d());
    let dom = HypercubeDomain::new(points.len());
    for concept in &family {
        let target = concept.model_id();
        let mut oracle = SimulatedUser::new(
            &dom,
            target,
            1.0,
            NoiseModel::Uniform,
            ValidChoice::AdversarialValid,
            ChaCha8Rng::seed_from_u64(target.index() as u64),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let (learned, queries) =
            proper_hyperplane_learner(&points, &family, &mut oracle, &mut rng).unwrap();
        assert_eq!(learned.model_id(), target);
        assert!(queries <= bound, "{queries} > {bound}");
    }
}

#[test]
fn noisy_proper_learner_succeeds_mostly() {
    let points = PointSet::new(
        1,
        vec![vec![0.0], vec![1.0], vec![2.0], vec![3.0], vec![4.0]],
    )
    .unwrap();
    let family = enumerate_hyperplane_family(&points);
    let support = family_support(&family);
    let schedule = NoisySchedule::new(support.len(), 0.85, 0.2, 0.5).unwrap();
    let dom = HypercubeDomain::new(points.len());
    let target = support[support.len() / 2];
    let trials = 200;
    let mut ok = 0;
    for seed in 0..trials {
        let mut oracle = SimulatedUser::new(
            &dom,
            target,
            0.85,
            NoiseModel::Uniform,
            ValidChoice::UniformValid,
            ChaCha8Rng::seed_from_u64(seed),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(10_000 + seed);
        let (learned, _) =
            proper_hyperplane_learner_noisy(&points, &family, &schedule, &mut oracle, &mut rng)
                .unwrap();
        if learned.map(|c| c.model_id()) == Some(target) {
            ok += 1;
        }
    }
    assert!(
        ok as f64 >= 0.8 * trials as f64,
        "noisy success only {ok}/{trials}"
    );
}
