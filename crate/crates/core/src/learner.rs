//! The interactive learners: halving under perfect feedback and the
//! staged multiplicative-weights algorithm under probabilistic noise.

use rand_chacha::ChaCha8Rng;

use crate::adapter::DomainAdapter;
use crate::error::Error;
use crate::graph::ModelId;
use crate::median::MedianSelector;
use crate::oracle::Oracle;
use crate::schedule::NoisySchedule;
use crate::weights::LikelihoodState;

/// Outcome of a learner run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LearnOutcome {
    pub model: ModelId,
    pub queries: usize,
}

/// Noiseless halving: query a small-potential model, intersect the
/// consistent set with the response's reach set, repeat. With per-round
/// potential at most `β`, terminates within `⌈log_{1/β} N0⌉` queries.
pub fn learn_noiseless<A, M>(
    adapter: &A,
    init: &[ModelId],
    oracle: &mut dyn Oracle,
    selector: &mut M,
    rng: &mut ChaCha8Rng,
) -> Result<LearnOutcome, Error>
where
    A: DomainAdapter + ?Sized,
    M: MedianSelector<A> + ?Sized,
{
    let mut consistent: Vec<ModelId> = init.to_vec();
    let mut queries = 0;
    loop {
        match consistent.len() {
            0 => return Err(Error::TargetNotInSet),
            1 => {
                return Ok(LearnOutcome {
                    model: consistent[0],
                    queries,
                })
            }
            _ => {}
        }
        let weights = vec![1.0 / consistent.len() as f64; consistent.len()];
        let query = selector.select(adapter, &consistent, &weights, rng);
        let fb = oracle.respond(query, &consistent, &weights);
        queries += 1;
        if fb == query {
            return Ok(LearnOutcome {
                model: query,
                queries,
            });
        }
        let edge_len = adapter
            .feedback_edge_len(query, fb)
            .ok_or(Error::NotAFeedbackEdge {
                from: query,
                to: fb,
            })?;
        consistent.retain(|&m| adapter.reach_contains(query, fb, edge_len, m));
    }
}

/// One multiplicative-weights stage: for `K + 1` iterations, mark every
/// model holding at least half the total likelihood, query a
/// small-potential model, and fold the response into the likelihood
/// counts. Returns the marked models (ascending, deduplicated) and the
/// final likelihood state.
pub fn multiweights<A, M>(
    adapter: &A,
    init: &[ModelId],
    k: u32,
    p: f64,
    oracle: &mut dyn Oracle,
    selector: &mut M,
    rng: &mut ChaCha8Rng,
) -> (Vec<ModelId>, LikelihoodState, usize)
where
    A: DomainAdapter + ?Sized,
    M: MedianSelector<A> + ?Sized,
{
    let mut state = LikelihoodState::new(init.to_vec(), p);
    let mut marked: Vec<ModelId> = Vec::new();
    let mut queries = 0;
    for _ in 0..=k {
        let weights = state.weights();
        for (i, &m) in init.iter().enumerate() {
            if weights[i] >= 0.5 && !marked.contains(&m) {
                marked.push(m);
            }
        }
        let query = selector.select(adapter, init, &weights, rng);
        let fb = oracle.respond(query, init, &weights);
        queries += 1;
        state.record_response(adapter, query, fb);
    }
    marked.sort_unstable();
    (marked, state, queries)
}

/// Result of a noisy run: the learned model (or `None` on the legal
/// failure outcome of probability ≤ δ) and the total query count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoisyOutcome {
    pub model: Option<ModelId>,
    pub queries: usize,
}

/// Noise-tolerant learner: two multiplicative-weights stages narrow the
/// space to a shortlist, then each shortlisted model is queried repeatedly
/// and returned iff confirmed by a majority. Succeeds with probability at
/// least `1 − δ` under response accuracy `p`.
///
/// `p = 1` callers should use [`learn_noiseless`] directly; the schedule
/// construction rejects `p = 1`.
pub fn learn_noisy<A, M>(
    adapter: &A,
    init: &[ModelId],
    schedule: &NoisySchedule,
    oracle: &mut dyn Oracle,
    selector: &mut M,
    rng: &mut ChaCha8Rng,
) -> Result<NoisyOutcome, Error>
where
    A: DomainAdapter + ?Sized,
    M: MedianSelector<A> + ?Sized,
{
    let mut queries = 0;

    let (s1, _, q1) = multiweights(
        adapter,
        init,
        schedule.k1(),
        schedule.p,
        oracle,
        selector,
        rng,
    );
    queries += q1;
    if s1.is_empty() {
        return Ok(NoisyOutcome {
            model: None,
            queries,
        });
    }

    let (s2, _, q2) = multiweights(
        adapter,
        &s1,
        schedule.k2(s1.len()),
        schedule.p,
        oracle,
        selector,
        rng,
    );
    queries += q2;
    if s2.is_empty() {
        return Ok(NoisyOutcome {
            model: None,
            queries,
        });
    }

    let repeats = schedule.repeat_count(s2.len());
    let uniform = vec![1.0 / s2.len() as f64; s2.len()];
    for &cand in &s2 {
        let mut confirmations = 0u32;
        for _ in 0..repeats {
            let fb = oracle.respond(cand, &s2, &uniform);
            queries += 1;
            if fb == cand {
                confirmations += 1;
            }
        }
        if 2 * confirmations >= repeats {
            return Ok(NoisyOutcome {
                model: Some(cand),
                queries,
            });
        }
    }
    Ok(NoisyOutcome {
        model: None,
        queries,
    })
}
