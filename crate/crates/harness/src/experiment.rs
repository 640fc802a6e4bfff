//! The experiment runner: seeded trials, per-trial records, and summary
//! statistics with bound-violation accounting.

use std::path::Path;

use eqgraph_core::{
    learn_noiseless, learn_noisy, DomainAdapter, GammaMedian, MedianSelector, ModelId, NoiseModel,
    NoisySchedule, PhiMedian, SimulatedUser, ValidChoice,
};
use eqgraph_classify::{
    enumerate_hyperplane_family, family_support, HypercubeDomain, HyperplaneLpSelector,
};
use eqgraph_clustering::{restricted_support, ClusterFamily, ClusteringSpace, FeedbackMode};
use eqgraph_ranking::{
    factorial, play_ranking_game, AdjacentSwapDomain, BlockMoveDomain, FixedTargetResponder,
    LowerBoundAdversary, PairDecompositionMedian, Permutation, RankingStrategy,
    SampledRankerParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::theoretical_bound;
use crate::config::{
    DomainKind, ExperimentConfig, FamilySpec, MedianKind, NoiseKind, OracleKind,
};
use crate::error::HarnessError;
use crate::inputs::{generate_points, load_family};

const TARGET_SALT: u64 = 0x9E37_79B9_7F4A_7C15;
const ORACLE_SALT: u64 = 0xD1B5_4A32_D192_ED03;
const LEARNER_SALT: u64 = 0x94D0_49BB_1331_11EB;

/// One trial's CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub trial: usize,
    pub domain: String,
    pub n: usize,
    /// Initial candidate-set size (the `N` column).
    pub n0: usize,
    pub p: f64,
    pub delta: f64,
    pub noise_model: String,
    pub queries: usize,
    pub success: bool,
    pub theoretical_bound: f64,
    pub seed: u64,
}

/// Aggregates over one experiment.
#[derive(Debug, Clone)]
pub struct Summary {
    pub trials: usize,
    pub mean_queries: f64,
    pub p95_queries: usize,
    pub success_rate: f64,
    /// Noiseless records whose query count exceeded the exact ceiling —
    /// must be zero. Not counted under noise (leading-term reference) or
    /// in adversary mode (the bound is a floor).
    pub bound_violations: usize,
    /// True when the reported bound omits lower-order terms (noisy runs).
    pub bound_is_leading_term: bool,
}

/// Runs all trials of `config` (trial `i` uses seed `base_seed + i`) and
/// summarizes them.
pub fn run_experiment(
    config: &ExperimentConfig,
) -> Result<(Vec<RunRecord>, Summary), HarnessError> {
    let (outcomes, n0) = match config.domain {
        DomainKind::RankingBubble | DomainKind::RankingInsertion => run_ranking(config)?,
        DomainKind::ClusteringUnspecified | DomainKind::ClusteringSpecified => {
            run_clustering(config)?
        }
        DomainKind::ClassifyHypercube | DomainKind::ClassifyHyperplane => run_classify(config)?,
    };
    let bound = theoretical_bound(config, n0);
    let records: Vec<RunRecord> = outcomes
        .into_iter()
        .enumerate()
        .map(|(trial, (queries, success))| RunRecord {
            trial,
            domain: config.domain.name().to_string(),
            n: config.n,
            n0,
            p: config.p,
            delta: config.delta,
            noise_model: config.noise.name().to_string(),
            queries,
            success,
            theoretical_bound: bound,
            seed: config.base_seed + trial as u64,
        })
        .collect();
    let summary = summarize(config, &records);
    Ok((records, summary))
}

/// Initial candidate-set size for `config` without running any trial.
pub fn initial_support_size(config: &ExperimentConfig) -> Result<usize, HarnessError> {
    match config.domain {
        DomainKind::RankingBubble | DomainKind::RankingInsertion => Ok(factorial(config.n)),
        DomainKind::ClusteringUnspecified | DomainKind::ClusteringSpecified => {
            let (_, support) = clustering_setup(config)?;
            Ok(support.len())
        }
        DomainKind::ClassifyHypercube => Ok(1 << config.n),
        DomainKind::ClassifyHyperplane => {
            let points = hyperplane_points(config)?;
            Ok(family_support(&enumerate_hyperplane_family(&points)).len())
        }
    }
}

fn summarize(config: &ExperimentConfig, records: &[RunRecord]) -> Summary {
    let trials = records.len();
    let mut queries: Vec<usize> = records.iter().map(|r| r.queries).collect();
    queries.sort_unstable();
    let mean = queries.iter().sum::<usize>() as f64 / trials.max(1) as f64;
    let p95 = if queries.is_empty() {
        0
    } else {
        let idx = ((trials as f64) * 0.95).ceil() as usize;
        queries[idx.clamp(1, trials) - 1]
    };
    let successes = records.iter().filter(|r| r.success).count();
    let ceiling_applies = config.p >= 1.0 && config.oracle != OracleKind::Adversary;
    let violations = if ceiling_applies {
        records
            .iter()
            .filter(|r| (r.queries as f64) > r.theoretical_bound)
            .count()
    } else {
        0
    };
    Summary {
        trials,
        mean_queries: mean,
        p95_queries: p95,
        success_rate: successes as f64 / trials.max(1) as f64,
        bound_violations: violations,
        bound_is_leading_term: config.p < 1.0,
    }
}

fn noise_model(kind: NoiseKind) -> NoiseModel {
    match kind {
        NoiseKind::Uniform => NoiseModel::Uniform,
        NoiseKind::Adversarial => NoiseModel::Adversarial,
        NoiseKind::ConfirmSpam => NoiseModel::ConfirmSpam,
    }
}

fn valid_choice(kind: OracleKind) -> ValidChoice {
    match kind {
        OracleKind::UniformValid => ValidChoice::UniformValid,
        OracleKind::AdversarialValid | OracleKind::Adversary => ValidChoice::AdversarialValid,
    }
}

/// Shared trial loop for any dense-id domain with a simulated user.
fn run_adapter_trials<A, M>(
    adapter: &A,
    support: &[ModelId],
    config: &ExperimentConfig,
    mut make_selector: impl FnMut() -> M,
) -> Result<Vec<(usize, bool)>, HarnessError>
where
    A: DomainAdapter + ?Sized,
    M: MedianSelector<A>,
{
    let schedule = if config.p < 1.0 {
        Some(NoisySchedule::new(
            support.len(),
            config.p,
            config.delta,
            crate::bounds::beta_for(config),
        )?)
    } else {
        None
    };
    let mut outcomes = Vec::with_capacity(config.trials);
    for trial in 0..config.trials {
        let seed = config.base_seed + trial as u64;
        let mut pick = ChaCha8Rng::seed_from_u64(seed ^ TARGET_SALT);
        let target = support[pick.random_range(0..support.len())];
        let mut oracle = SimulatedUser::new(
            adapter,
            target,
            config.p,
            noise_model(config.noise),
            valid_choice(config.oracle),
            ChaCha8Rng::seed_from_u64(seed ^ ORACLE_SALT),
        );
        let mut learner_rng = ChaCha8Rng::seed_from_u64(seed ^ LEARNER_SALT);
        let mut selector = make_selector();
        let outcome = match &schedule {
            None => {
                let out =
                    learn_noiseless(adapter, support, &mut oracle, &mut selector, &mut learner_rng)?;
                (out.queries, out.model == target)
            }
            Some(schedule) => {
                let out = learn_noisy(
                    adapter,
                    support,
                    schedule,
                    &mut oracle,
                    &mut selector,
                    &mut learner_rng,
                )?;
                (out.queries, out.model == Some(target))
            }
        };
        outcomes.push(outcome);
    }
    Ok(outcomes)
}

fn run_ranking(config: &ExperimentConfig) -> Result<(Vec<(usize, bool)>, usize), HarnessError> {
    let n = config.n;
    let n0 = factorial(n);
    if config.oracle == OracleKind::Adversary {
        let strategy = match config.median {
            MedianKind::Sampled => RankingStrategy::SampledMedian,
            _ => RankingStrategy::ExactMedian,
        };
        if strategy == RankingStrategy::ExactMedian && n > 6 {
            return Err(HarnessError::Config(format!(
                "field `n`: exact-median adversary games are limited to n ≤ 6, got {n}"
            )));
        }
        let params = SampledRankerParams::fast_for_items(n);
        let mut outcomes = Vec::with_capacity(config.trials);
        for trial in 0..config.trials {
            let seed = config.base_seed + trial as u64;
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ LEARNER_SALT);
            let mut adv = LowerBoundAdversary::new(n);
            let out = play_ranking_game(n, strategy, &mut adv, &params, &mut rng)?;
            let consistent = adv
                .committed_ranking()
                .is_some_and(|c| c == out.final_ranking && adv.transcript_consistent_with(&c));
            outcomes.push((out.queries, consistent));
        }
        return Ok((outcomes, n0));
    }

    if config.median == MedianKind::Sampled {
        // Implicit consistent set: plays against a fixed random target that
        // always corrects its leftmost out-of-order adjacent pair.
        let params = SampledRankerParams::for_items(n);
        let mut outcomes = Vec::with_capacity(config.trials);
        for trial in 0..config.trials {
            let seed = config.base_seed + trial as u64;
            let mut pick = ChaCha8Rng::seed_from_u64(seed ^ TARGET_SALT);
            let target = Permutation::from_lehmer(ModelId(pick.random_range(0..n0)), n);
            let mut responder = FixedTargetResponder::new(target.clone());
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ LEARNER_SALT);
            let (got, queries) =
                eqgraph_ranking::learn_ranking_sampled(n, &mut responder, &params, &mut rng)?;
            outcomes.push((queries, got == target));
        }
        return Ok((outcomes, n0));
    }

    let support: Vec<ModelId> = (0..n0).map(ModelId).collect();
    let outcomes = match (config.domain, config.median) {
        (DomainKind::RankingBubble, MedianKind::GammaExact) => {
            let domain = AdjacentSwapDomain::new(n);
            run_adapter_trials(&domain, &support, config, || PairDecompositionMedian)?
        }
        (DomainKind::RankingBubble, _) => {
            let domain = AdjacentSwapDomain::new(n);
            run_adapter_trials(&domain, &support, config, || PhiMedian)?
        }
        (_, MedianKind::GammaExact) => {
            let domain = BlockMoveDomain::new(n);
            run_adapter_trials(&domain, &support, config, || GammaMedian)?
        }
        _ => {
            let domain = BlockMoveDomain::new(n);
            run_adapter_trials(&domain, &support, config, || PhiMedian)?
        }
    };
    Ok((outcomes, n0))
}

fn clustering_setup(
    config: &ExperimentConfig,
) -> Result<(ClusteringSpace, Vec<ModelId>), HarnessError> {
    let mode = if config.domain == DomainKind::ClusteringUnspecified {
        FeedbackMode::Unspecified
    } else {
        FeedbackMode::Specified
    };
    let space = ClusteringSpace::new(config.n, mode);
    let support = match &config.family {
        FamilySpec::All => space.all_models(),
        FamilySpec::Intervals => {
            let family = ClusterFamily::intervals(config.n, config.k, false);
            restricted_support(&space, &family)?
        }
        FamilySpec::File(path) => {
            let clusters = load_family(Path::new(path), config.n)?;
            let family = ClusterFamily::new(config.n, clusters, config.k, false).ok_or_else(
                || HarnessError::Config(format!("field `family`: invalid cluster file {path}")),
            )?;
            restricted_support(&space, &family)?
        }
    };
    Ok((space, support))
}

fn run_clustering(
    config: &ExperimentConfig,
) -> Result<(Vec<(usize, bool)>, usize), HarnessError> {
    let (space, support) = clustering_setup(config)?;
    let n0 = support.len();
    let outcomes = match config.median {
        MedianKind::GreedyClustering => {
            run_adapter_trials(&space, &support, config, || {
                eqgraph_clustering::GreedyClusteringMedian
            })?
        }
        MedianKind::PhiExact => run_adapter_trials(&space, &support, config, || PhiMedian)?,
        _ => run_adapter_trials(&space, &support, config, || GammaMedian)?,
    };
    Ok((outcomes, n0))
}

fn hyperplane_points(
    config: &ExperimentConfig,
) -> Result<eqgraph_classify::PointSet, HarnessError> {
    match &config.points {
        Some(path) => crate::inputs::load_points(Path::new(path), config.d),
        None => Ok(generate_points(config.d, config.n, config.base_seed)),
    }
}

fn run_classify(config: &ExperimentConfig) -> Result<(Vec<(usize, bool)>, usize), HarnessError> {
    if config.domain == DomainKind::ClassifyHypercube {
        let domain = HypercubeDomain::new(config.n);
        let support: Vec<ModelId> = (0..domain.model_count()).map(ModelId).collect();
        let n0 = support.len();
        let outcomes = match config.median {
            MedianKind::PhiExact => run_adapter_trials(&domain, &support, config, || PhiMedian)?,
            _ => run_adapter_trials(&domain, &support, config, || GammaMedian)?,
        };
        return Ok((outcomes, n0));
    }
    let points = hyperplane_points(config)?;
    let family = enumerate_hyperplane_family(&points);
    let support = family_support(&family);
    let n0 = support.len();
    let domain = HypercubeDomain::new(points.len());
    let outcomes = match config.median {
        MedianKind::HyperplaneLp => run_adapter_trials(&domain, &support, config, || {
            HyperplaneLpSelector::new(points.clone())
        })?,
        MedianKind::PhiExact => run_adapter_trials(&domain, &support, config, || PhiMedian)?,
        _ => run_adapter_trials(&domain, &support, config, || GammaMedian)?,
    };
    Ok((outcomes, n0))
}
