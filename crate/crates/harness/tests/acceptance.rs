//! End-to-end acceptance suite. Each test exercises one headline guarantee
//! of the workspace and prints a single pass/fail line; run with
//! `cargo test -p eqgraph --test acceptance -- --nocapture` to see them all.

use eqgraph::{run_experiment, theoretical_bound, ConfigDraft, ExperimentConfig};
use eqgraph_classify::{
    caratheodory_pair, enumerate_hyperplane_family, family_support, hyperplane_median,
    HullRelation, HypercubeDomain,
};
use eqgraph_clustering::{
    enumerate_partitions, greedy_uc_median, ClusteringSpace, FeedbackMode,
};
use eqgraph_core::{
    exact_median, learn_noiseless, potential, sampled_median, DomainAdapter, ModelId, NoiseModel,
    SampleBudget, SimulatedUser, ValidChoice, WeightSampler,
};
use eqgraph_ranking::{
    adjacent_swap_graph, block_move_graph, count_extensions, default_chain_steps,
    enumerate_extensions, factorial, forced_query_floor, play_ranking_game,
    sample_linear_extension, surviving_rotations, verify_witness, AdjacentSwapDomain,
    BlockMoveDomain, LowerBoundAdversary, PairDecompositionMedian, PartialOrderConstraints,
    Permutation, RankingStrategy, SampledRankerParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(idx: usize, name: &str, passed: bool, detail: &str) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    println!("criterion {idx}: {verdict} - {name} ({detail})");
    assert!(passed, "criterion {idx} failed: {name} ({detail})");
}

fn random_weights(len: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    (0..len).map(|_| rng.random_range(0.01..1.0)).collect()
}

/// 1. The exact distance-median has potential ≤ ½ on undirected spaces.
#[test]
fn criterion_01_median_potential_half() {
    let swap = AdjacentSwapDomain::new(4);
    let cube = HypercubeDomain::new(4);
    let gc = ClusteringSpace::new(4, FeedbackMode::Specified);
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst: f64 = 0.0;
    let mut draws = 0usize;
    {
        let mut run = |adapter: &dyn DomainAdapter| {
            let support: Vec<ModelId> = (0..adapter.model_count()).map(ModelId).collect();
            for _ in 0..1000 {
                let w = random_weights(support.len(), &mut rng);
                let (_, phi) = exact_median(adapter, &support, &w).unwrap();
                worst = worst.max(phi);
                draws += 1;
            }
        };
        run(&swap);
        run(&cube);
        run(&gc);
    }
    report(
        1,
        "exact median keeps potential ≤ 1/2 on undirected spaces",
        worst <= 0.5 + 1e-12,
        &format!("worst Φ = {worst:.6} over {draws} weight draws on 3 spaces"),
    );
}

/// 2. Noiseless ranking halving stays within ⌈log₂ N₀⌉ queries even against
/// the adversarial-valid responder.
#[test]
fn criterion_02_noiseless_ranking_halving() {
    let mut worst_small = 0usize;
    let mut worst_large = 0usize;

    let n = 5;
    let dom = AdjacentSwapDomain::new(n);
    let support: Vec<ModelId> = (0..factorial(n)).map(ModelId).collect();
    for target in 0..support.len() {
        let mut oracle = SimulatedUser::new(
            &dom,
            ModelId(target),
            1.0,
            NoiseModel::Uniform,
            ValidChoice::AdversarialValid,
            ChaCha8Rng::seed_from_u64(target as u64),
        );
        let mut selector = PairDecompositionMedian;
        let mut rng = ChaCha8Rng::seed_from_u64(202);
        let out = learn_noiseless(&dom, &support, &mut oracle, &mut selector, &mut rng).unwrap();
        assert_eq!(out.model, ModelId(target));
        worst_small = worst_small.max(out.queries);
    }

    let n = 7;
    let dom = AdjacentSwapDomain::new(n);
    let support: Vec<ModelId> = (0..factorial(n)).map(ModelId).collect();
    let mut pick = ChaCha8Rng::seed_from_u64(203);
    for trial in 0..500 {
        let target = ModelId(pick.random_range(0..support.len()));
        let mut oracle = SimulatedUser::new(
            &dom,
            target,
            1.0,
            NoiseModel::Uniform,
            ValidChoice::AdversarialValid,
            ChaCha8Rng::seed_from_u64(trial),
        );
        let mut selector = PairDecompositionMedian;
        let mut rng = ChaCha8Rng::seed_from_u64(204);
        let out = learn_noiseless(&dom, &support, &mut oracle, &mut selector, &mut rng).unwrap();
        assert_eq!(out.model, target);
        worst_large = worst_large.max(out.queries);
    }

    report(
        2,
        "noiseless ranking halving meets the log₂ query ceiling",
        worst_small <= 7 && worst_large <= 13,
        &format!(
            "n=5: worst {worst_small}/7 over all 120 targets; n=7: worst {worst_large}/13 over 500 targets"
        ),
    );
}

/// 3. Closed-form distances agree with Dijkstra on explicit graphs.
#[test]
fn criterion_03_distances_match_dijkstra() {
    let mut mismatches = 0usize;
    let mut checked = 0usize;

    for n in 2..=4usize {
        let swap = AdjacentSwapDomain::new(n);
        let sg = adjacent_swap_graph(n);
        let block = BlockMoveDomain::new(n);
        let bg = block_move_graph(n);
        for s in 0..factorial(n) {
            let ds = sg.distances_from(ModelId(s));
            let db = bg.distances_from(ModelId(s));
            for t in 0..factorial(n) {
                checked += 2;
                if swap.distance(ModelId(s), ModelId(t)) != ds[t] {
                    mismatches += 1;
                }
                if block.distance(ModelId(s), ModelId(t)) != db[t] {
                    mismatches += 1;
                }
            }
        }
        for mode in [FeedbackMode::Unspecified, FeedbackMode::Specified] {
            let space = ClusteringSpace::new(n, mode);
            let g = space.explicit_graph();
            for s in 0..space.model_count() {
                let d = g.distances_from(ModelId(s));
                for t in 0..space.model_count() {
                    checked += 1;
                    if space.distance(ModelId(s), ModelId(t)) != d[t] {
                        mismatches += 1;
                    }
                }
            }
        }
    }

    // n = 5 rankings: 10⁴ sampled ordered pairs per graph.
    let n = 5;
    let swap = AdjacentSwapDomain::new(n);
    let sg = adjacent_swap_graph(n);
    let block = BlockMoveDomain::new(n);
    let bg = block_move_graph(n);
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for _ in 0..10_000 {
        let s = ModelId(rng.random_range(0..factorial(n)));
        let t = ModelId(rng.random_range(0..factorial(n)));
        checked += 2;
        if swap.distance(s, t) != sg.distances_from(s)[t.index()] {
            mismatches += 1;
        }
        if block.distance(s, t) != bg.distances_from(s)[t.index()] {
            mismatches += 1;
        }
    }
    // n = 5 clusterings: all ordered pairs, both feedback modes.
    for mode in [FeedbackMode::Unspecified, FeedbackMode::Specified] {
        let space = ClusteringSpace::new(5, mode);
        let g = space.explicit_graph();
        for s in 0..space.model_count() {
            let d = g.distances_from(ModelId(s));
            for t in 0..space.model_count() {
                checked += 1;
                if space.distance(ModelId(s), ModelId(t)) != d[t] {
                    mismatches += 1;
                }
            }
        }
    }

    report(
        3,
        "closed-form distances equal Dijkstra on every graph",
        mismatches == 0,
        &format!("{mismatches} mismatches over {checked} pairs (exhaustive n ≤ 4, sampled/exhaustive n = 5)"),
    );
}

/// 4. The greedy clustering median satisfies the ½ potential bound exactly,
/// verified in integer arithmetic.
#[test]
fn criterion_04_greedy_clustering_exact_half() {
    let n = 4;
    let space = ClusteringSpace::new(n, FeedbackMode::Unspecified);
    let parts = enumerate_partitions(n);
    let support = space.all_models();
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut violations = 0usize;
    for _ in 0..1000 {
        let int_w: Vec<u64> = (0..parts.len()).map(|_| rng.random_range(1..1000u64)).collect();
        let w: Vec<f64> = int_w.iter().map(|&x| x as f64).collect();
        let median = space.id_of(&greedy_uc_median(n, &parts, &w));
        let total: u128 = int_w.iter().map(|&x| x as u128).sum();
        for (fb, len) in space.feedback_edges(median) {
            let mass: u128 = support
                .iter()
                .zip(&int_w)
                .filter(|(&m, _)| space.reach_contains(median, fb, len, m))
                .map(|(_, &x)| x as u128)
                .sum();
            if 2 * mass > total {
                violations += 1;
            }
        }
    }
    report(
        4,
        "greedy clustering median: every reach set holds ≤ half the weight, exactly",
        violations == 0,
        &format!("{violations} integer-arithmetic violations over 1000 weight vectors, n = {n}"),
    );
}

/// 5. The hyperplane median meets its (d+1)/(d+2) potential bound, and the
/// hull-intersection witnesses behind it never use more than d+2 points.
#[test]
fn criterion_05_hyperplane_median_and_caratheodory() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut worst_excess: f64 = f64::NEG_INFINITY;
    for d in 1..=2usize {
        let points = eqgraph::generate_points(d, 8, 505 + d as u64);
        let family = enumerate_hyperplane_family(&points);
        let support = family_support(&family);
        let dom = HypercubeDomain::new(points.len());
        let bound = (d as f64 + 1.0) / (d as f64 + 2.0);
        for _ in 0..200 {
            let w = random_weights(support.len(), &mut rng);
            let median = hyperplane_median(&points, &support, &w);
            let phi = potential(&dom, &support, &w, median.model_id()).unwrap();
            worst_excess = worst_excess.max(phi - bound);
        }
    }

    let mut intersecting = 0usize;
    let mut witness_bad = 0usize;
    let mut reverify_bad = 0usize;
    while intersecting < 500 {
        let d = 1 + (intersecting % 3);
        let sample = |rng: &mut ChaCha8Rng, d: usize| -> Vec<Vec<f64>> {
            (0..rng.random_range(2..=6))
                .map(|_| (0..d).map(|_| rng.random_range(-4.0..4.0)).collect())
                .collect()
        };
        let p = sample(&mut rng, d);
        let q = sample(&mut rng, d);
        if let HullRelation::Intersecting {
            p_indices,
            q_indices,
            ..
        } = caratheodory_pair(&p, &q, d)
        {
            intersecting += 1;
            if p_indices.len() + q_indices.len() > d + 2 {
                witness_bad += 1;
            }
            let sub_p: Vec<Vec<f64>> = p_indices.iter().map(|&i| p[i].clone()).collect();
            let sub_q: Vec<Vec<f64>> = q_indices.iter().map(|&i| q[i].clone()).collect();
            if !matches!(
                caratheodory_pair(&sub_p, &sub_q, d),
                HullRelation::Intersecting { .. }
            ) {
                reverify_bad += 1;
            }
        }
    }

    report(
        5,
        "hyperplane median potential ≤ (d+1)/(d+2); hull witnesses use ≤ d+2 points",
        worst_excess <= 1e-9 && witness_bad == 0 && reverify_bad == 0,
        &format!(
            "worst Φ excess {worst_excess:.2e} (d ∈ {{1,2}}, 200 draws each); {witness_bad} oversized and {reverify_bad} non-reverifiable witnesses in 500 intersecting instances"
        ),
    );
}

fn ranking_noisy_config(trials: usize) -> ExperimentConfig {
    let mut draft = ConfigDraft::new();
    for (k, v) in [
        ("domain", "ranking"),
        ("feedback", "bubble"),
        ("n", "5"),
        ("p", "0.85"),
        ("delta", "0.2"),
        ("noise", "uniform"),
        ("oracle", "uniform-valid"),
        ("median", "gamma-exact"),
        ("seed", "0"),
    ] {
        draft.set(k, v).unwrap();
    }
    draft.set("trials", trials.to_string()).unwrap();
    draft.build().unwrap()
}

/// 6. Noisy ranking runs succeed with probability ≥ 1 − δ and stay within a
/// small constant of the information-theoretic leading term.
#[test]
fn criterion_06_noisy_ranking_experiment() {
    let config = ranking_noisy_config(400);
    let (records, summary) = run_experiment(&config).unwrap();
    assert_eq!(records.len(), 400);
    let bound = theoretical_bound(&config, 120);
    // 1 − δ = 0.8 minus three binomial standard deviations at 400 trials.
    let floor = 0.8 - 3.0 * (0.8f64 * 0.2 / 400.0).sqrt();
    let ok = summary.success_rate >= floor && summary.mean_queries <= 5.0 * bound;
    report(
        6,
        "noisy ranking: success ≥ 1 − δ and mean queries within 5× the leading term",
        ok,
        &format!(
            "success {:.3} (floor {:.3}), mean {:.2} vs 5×{:.2} = {:.2}, 400 trials",
            summary.success_rate,
            floor,
            summary.mean_queries,
            bound,
            5.0 * bound
        ),
    );
}

/// 7. The adaptive ranking adversary forces every strategy past the
/// recurrence floor, while staying consistent with its committed ranking.
#[test]
fn criterion_07_adversary_floor() {
    let mut details = Vec::new();
    let mut ok = true;

    let mut play = |n: usize, strategy: RankingStrategy, params: &SampledRankerParams| {
        let mut adv = LowerBoundAdversary::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(707);
        let out = play_ranking_game(n, strategy, &mut adv, params, &mut rng).unwrap();
        let floor = forced_query_floor(n);
        let committed = adv.committed_ranking().expect("adversary must commit");
        let consistent = committed == out.final_ranking && adv.transcript_consistent_with(&committed);
        if out.queries < floor || !consistent {
            ok = false;
        }
        details.push(format!("{strategy:?} n={n}: {} ≥ {floor}", out.queries));
    };

    // Exact Γ-argmin median enumerates all n! consistent rankings per query;
    // n = 16 is its practical ceiling, so it plays 8 and 16 only.
    for n in [8usize, 16] {
        play(n, RankingStrategy::ExactMedian, &SampledRankerParams::fast_for_items(n));
    }
    for n in [8usize, 16, 32] {
        play(n, RankingStrategy::NaiveSwapFix, &SampledRankerParams::fast_for_items(n));
        // Lighter sampling budget at n = 32 keeps the game tractable; the
        // floor is information-theoretic, so a cheaper median cannot dip
        // below it.
        let params = if n == 32 {
            SampledRankerParams {
                chain_steps: 2 * n * n,
                sampler_bias: 0.05,
                eps: 0.1,
                budget: SampleBudget {
                    samples: 100,
                    max_moves: 3 * n * n + 16,
                },
            }
        } else {
            SampledRankerParams::fast_for_items(n)
        };
        play(n, RankingStrategy::SampledMedian, &params);
    }

    report(
        7,
        "adaptive adversary forces the query floor on every strategy",
        ok,
        &details.join("; "),
    );
}

/// 8. The linear-extension sampler is near-uniform on every poset with
/// n ≤ 4 items.
#[test]
fn criterion_08_linext_sampler_uniform() {
    // Strict partial orders on n labeled items: 1, 3, 19, 219 for n = 1..4.
    let expected_posets = [1usize, 3, 19, 219];
    let draws = 10_000usize;
    let mut worst_tv: f64 = 0.0;
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        let mut posets = 0usize;
        for mask in 0u32..(1 << pairs.len()) {
            let rel = |a: usize, b: usize| {
                let idx = pairs.iter().position(|&p| p == (a, b)).unwrap();
                mask >> idx & 1 == 1
            };
            let antisymmetric = pairs.iter().all(|&(a, b)| !(rel(a, b) && rel(b, a)));
            let transitive = (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| {
                        a == b || b == c || a == c || !(rel(a, b) && rel(b, c)) || rel(a, c)
                    })
                })
            });
            if !antisymmetric || !transitive {
                continue;
            }
            posets += 1;

            let mut constraints = PartialOrderConstraints::new(n);
            for &(a, b) in &pairs {
                if rel(a, b) {
                    constraints.add(a, b).unwrap();
                }
            }
            let exts = enumerate_extensions(&constraints);
            assert_eq!(exts.len() as u64, count_extensions(&constraints));
            if exts.len() == 1 {
                continue;
            }
            let mut counts = vec![0usize; factorial(n)];
            let steps = default_chain_steps(n);
            for _ in 0..draws {
                let p = sample_linear_extension(&constraints, steps, &mut rng);
                counts[p.lehmer_rank().index()] += 1;
            }
            let uniform = 1.0 / exts.len() as f64;
            let mut tv = 0.0;
            let mut mass = 0usize;
            for e in &exts {
                let c = counts[e.lehmer_rank().index()];
                mass += c;
                tv += (c as f64 / draws as f64 - uniform).abs();
            }
            assert_eq!(mass, draws, "sampler produced a non-extension");
            worst_tv = worst_tv.max(tv / 2.0);
        }
        assert_eq!(posets, expected_posets[n - 1], "poset count at n = {n}");
    }
    report(
        8,
        "linear-extension sampler is near-uniform on every poset with n ≤ 4",
        worst_tv <= 0.05,
        &format!("worst total variation {worst_tv:.4} over 242 posets, {draws} draws each"),
    );
}

/// 9. The arbitrary-pair lower-bound witness: one response eliminates only
/// one of the n cyclic rotations, whatever the query.
#[test]
fn criterion_09_rotation_witness() {
    let mut exact = true;
    for n in [3usize, 4] {
        for id in 0..factorial(n) {
            let q = Permutation::from_lehmer(ModelId(id), n);
            if surviving_rotations(n, &q) != n - 1 {
                exact = false;
            }
        }
    }
    report(
        9,
        "pair-query witness keeps exactly n−1 of n cyclic rotations",
        verify_witness(3) && verify_witness(4) && exact,
        "exhaustive over all queries, n = 3 and 4",
    );
}

/// 10. Sampled local-search median with an exact sampler lands within its
/// certified potential bound on almost every seed.
#[test]
fn criterion_10_sampled_median_potential() {
    let dom = HypercubeDomain::new(4);
    let support: Vec<ModelId> = (0..16).map(ModelId).collect();
    let eps = 0.1;
    let budget = SampleBudget::certified(4, 4, 1, eps);
    let mut good = 0usize;
    let mut weights_rng = ChaCha8Rng::seed_from_u64(1010);
    for seed in 0..100u64 {
        let w = random_weights(16, &mut weights_rng);
        let sampler = WeightSampler::new(&support, &w).unwrap();
        let mut draw = |rng: &mut ChaCha8Rng| sampler.draw(rng);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = sampled_median(&dom, &mut draw, ModelId(0), 0.0, eps, &budget, &mut rng).unwrap();
        let phi = potential(&dom, &support, &w, m).unwrap();
        if phi <= 0.5 + eps {
            good += 1;
        }
    }
    report(
        10,
        "sampled median with exact sampler: Φ ≤ 1/2 + ε on ≥ 95 of 100 seeds",
        good >= 95,
        &format!("{good}/100 seeds within Φ ≤ 0.6 on the 4-cube"),
    );
}

/// 11. Experiments are deterministic: the same config yields byte-identical
/// CSV output.
#[test]
fn criterion_11_deterministic_output() {
    let config = ranking_noisy_config(25);
    let (r1, _) = run_experiment(&config).unwrap();
    let (r2, _) = run_experiment(&config).unwrap();
    let a = eqgraph::csv_string(&r1);
    let b = eqgraph::csv_string(&r2);
    report(
        11,
        "repeated experiment runs emit byte-identical CSV",
        a == b,
        &format!("{} bytes compared across two runs of 25 trials", a.len()),
    );
}
