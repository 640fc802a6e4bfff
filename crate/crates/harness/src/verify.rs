//! The `verify` verb: deterministic seeded re-runs of the cross-module
//! invariant oracles (closed-form distances vs Dijkstra, median potential
//! ceilings, sampler and witness checks).

use eqgraph_core::{exact_median, potential, DomainAdapter, ModelId};
use eqgraph_classify::{
    caratheodory_pair, enumerate_hyperplane_family, family_support, hyperplane_median,
    HullRelation, HypercubeDomain, PointSet,
};
use eqgraph_clustering::{
    enumerate_partitions, greedy_uc_median, ClusteringSpace, FeedbackMode,
};
use eqgraph_ranking::{
    adjacent_swap_graph, block_move_graph, verify_witness, AdjacentSwapDomain, BlockMoveDomain,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::HarnessError;

/// One named check of the verification suite.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

/// Runs the invariant checks for `scope` ∈ core|ranking|clustering|
/// classify|all. Deterministic: fixed seeds throughout.
pub fn verify_suite(scope: &str) -> Result<Vec<CheckResult>, HarnessError> {
    let mut out = Vec::new();
    match scope {
        "core" => out.extend(verify_core()),
        "ranking" => out.extend(verify_ranking()),
        "clustering" => out.extend(verify_clustering()),
        "classify" => out.extend(verify_classify()),
        "all" => {
            out.extend(verify_core());
            out.extend(verify_ranking());
            out.extend(verify_clustering());
            out.extend(verify_classify());
        }
        other => {
            return Err(HarnessError::Config(format!(
                "unknown scope `{other}` (core|ranking|clustering|classify|all)"
            )))
        }
    }
    Ok(out)
}

fn random_weights(len: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    (0..len).map(|_| rng.random_range(0.01..1.0)).collect()
}

fn verify_core() -> Vec<CheckResult> {
    let mut results = Vec::new();
    let dom = HypercubeDomain::new(4);
    let support: Vec<ModelId> = (0..16).map(ModelId).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let w = random_weights(16, &mut rng);
        let (_, phi) = exact_median(&dom, &support, &w).unwrap();
        worst = worst.max(phi);
    }
    results.push(check(
        "core: distance-median potential ≤ 1/2 on the 4-cube",
        worst <= 0.5 + 1e-12,
        format!("worst Φ = {worst:.6} over 200 weight draws"),
    ));
    let zero = potential(&dom, &support, &vec![0.0; 16], ModelId(0));
    results.push(check(
        "core: all-zero weight vectors rejected",
        zero.is_err(),
        "potential() must return an error",
    ));
    results
}

fn verify_ranking() -> Vec<CheckResult> {
    let mut results = Vec::new();
    let mut mismatches = 0usize;
    for n in 2..=4 {
        let swap = AdjacentSwapDomain::new(n);
        let swap_graph = adjacent_swap_graph(n);
        let block = BlockMoveDomain::new(n);
        let block_graph = block_move_graph(n);
        for s in 0..swap.model_count() {
            let ds = swap_graph.distances_from(ModelId(s));
            let db = block_graph.distances_from(ModelId(s));
            for t in 0..swap.model_count() {
                if swap.distance(ModelId(s), ModelId(t)) != ds[t] {
                    mismatches += 1;
                }
                if block.distance(ModelId(s), ModelId(t)) != db[t] {
                    mismatches += 1;
                }
            }
        }
    }
    results.push(check(
        "ranking: closed-form distances equal Dijkstra (n ≤ 4, both graphs)",
        mismatches == 0,
        format!("{mismatches} mismatches"),
    ));
    results.push(check(
        "ranking: arbitrary-pair witness keeps n−1 of n rotations (n = 3, 4)",
        verify_witness(3) && verify_witness(4),
        "exhaustive over all queries",
    ));
    results
}

fn verify_clustering() -> Vec<CheckResult> {
    let mut results = Vec::new();
    let mut mismatches = 0usize;
    for n in 2..=4 {
        for mode in [FeedbackMode::Unspecified, FeedbackMode::Specified] {
            let space = ClusteringSpace::new(n, mode);
            let g = space.explicit_graph();
            for s in 0..space.model_count() {
                let dist = g.distances_from(ModelId(s));
                for t in 0..space.model_count() {
                    if space.distance(ModelId(s), ModelId(t)) != dist[t] {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    results.push(check(
        "clustering: closed-form distances equal Dijkstra (n ≤ 4, both modes)",
        mismatches == 0,
        format!("{mismatches} mismatches"),
    ));

    let n = 4;
    let space = ClusteringSpace::new(n, FeedbackMode::Unspecified);
    let parts = enumerate_partitions(n);
    let support = space.all_models();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let w = random_weights(parts.len(), &mut rng);
        let median = greedy_uc_median(n, &parts, &w);
        let phi = potential(&space, &support, &w, space.id_of(&median)).unwrap();
        worst = worst.max(phi);
    }
    results.push(check(
        "clustering: greedy merge median potential ≤ 1/2",
        worst <= 0.5 + 1e-12,
        format!("worst Φ = {worst:.6} over 200 weight draws"),
    ));
    results
}

fn verify_classify() -> Vec<CheckResult> {
    let mut results = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut witness_ok = true;
    for d in 1..=2usize {
        for _ in 0..100 {
            let p: Vec<Vec<f64>> = (0..rng.random_range(1..=5))
                .map(|_| (0..d).map(|_| rng.random_range(-4.0..4.0)).collect())
                .collect();
            let q: Vec<Vec<f64>> = (0..rng.random_range(1..=5))
                .map(|_| (0..d).map(|_| rng.random_range(-4.0..4.0)).collect())
                .collect();
            if let HullRelation::Intersecting {
                p_indices,
                q_indices,
                ..
            } = caratheodory_pair(&p, &q, d)
            {
                if p_indices.len() + q_indices.len() > d + 2 {
                    witness_ok = false;
                }
            }
        }
    }
    results.push(check(
        "classify: hull-intersection witnesses use at most d + 2 points",
        witness_ok,
        "200 random instances, d ∈ {1, 2}",
    ));

    let points = PointSet::new(
        2,
        vec![
            vec![0.0, 0.0],
            vec![3.0, 1.0],
            vec![1.0, 4.0],
            vec![-2.0, 2.0],
            vec![2.0, -3.0],
        ],
    )
    .unwrap();
    let family = enumerate_hyperplane_family(&points);
    let support = family_support(&family);
    let dom = HypercubeDomain::new(points.len());
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let w = random_weights(support.len(), &mut rng);
        let median = hyperplane_median(&points, &support, &w);
        let phi = potential(&dom, &support, &w, median.model_id()).unwrap();
        worst = worst.max(phi);
    }
    results.push(check(
        "classify: hyperplane median potential ≤ (d+1)/(d+2)",
        worst <= 0.75 + 1e-9,
        format!("worst Φ = {worst:.6} over 50 weight draws"),
    ));
    results
}
