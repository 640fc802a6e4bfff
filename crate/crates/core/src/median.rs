//! Median (query-selection) strategies: exact Γ scans, exhaustive Φ scans,
//! and the sampling-based local search for spaces too large to enumerate.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::adapter::DomainAdapter;
use crate::error::Error;
use crate::graph::ModelId;
use crate::potential::{gamma_potential, potential};

/// Picks the next model to query given the current weighted support.
pub trait MedianSelector<A: DomainAdapter + ?Sized> {
    fn select(
        &mut self,
        adapter: &A,
        support: &[ModelId],
        weights: &[f64],
        rng: &mut ChaCha8Rng,
    ) -> ModelId;
}

/// Exact Γ-argmin over the whole model space (smallest id on ties). The
/// default strategy: its potential is certified ≤ ½ on undirected domains.
pub struct GammaMedian;

impl<A: DomainAdapter + ?Sized> MedianSelector<A> for GammaMedian {
    fn select(
        &mut self,
        adapter: &A,
        support: &[ModelId],
        weights: &[f64],
        _rng: &mut ChaCha8Rng,
    ) -> ModelId {
        let mut best = ModelId(0);
        let mut best_gamma = f64::INFINITY;
        for idx in 0..adapter.model_count() {
            let s = ModelId(idx);
            let g = gamma_potential(adapter, support, weights, s);
            if g < best_gamma {
                best_gamma = g;
                best = s;
            }
        }
        best
    }
}

/// Exhaustive Φ-argmin (smallest id on ties). Quadratically more expensive
/// than [`GammaMedian`]; selectable for small spaces and cross-checks.
pub struct PhiMedian;

impl<A: DomainAdapter + ?Sized> MedianSelector<A> for PhiMedian {
    fn select(
        &mut self,
        adapter: &A,
        support: &[ModelId],
        weights: &[f64],
        _rng: &mut ChaCha8Rng,
    ) -> ModelId {
        let mut best = ModelId(0);
        let mut best_phi = f64::INFINITY;
        for idx in 0..adapter.model_count() {
            let s = ModelId(idx);
            let phi = potential(adapter, support, weights, s).unwrap_or(f64::INFINITY);
            if phi < best_phi {
                best_phi = phi;
                best = s;
            }
        }
        best
    }
}

/// A model space navigable by local search, without requiring dense ids.
/// Implemented for free by every [`DomainAdapter`], and separately by
/// implicit spaces (e.g. permutations under precedence constraints) whose
/// models cannot be enumerated or densely indexed.
pub trait LocalSearchSpace {
    type Model: Clone + PartialEq + Ord;

    fn feedback_edges(&self, s: &Self::Model) -> Vec<(Self::Model, u64)>;

    /// Edge-on-shortest-path membership, as in
    /// [`DomainAdapter::reach_contains`].
    fn reach_contains(
        &self,
        s: &Self::Model,
        fb: &Self::Model,
        edge_len: u64,
        cand: &Self::Model,
    ) -> bool;
}

impl<A: DomainAdapter + ?Sized> LocalSearchSpace for A {
    type Model = ModelId;

    fn feedback_edges(&self, s: &ModelId) -> Vec<(ModelId, u64)> {
        DomainAdapter::feedback_edges(self, *s)
    }

    fn reach_contains(&self, s: &ModelId, fb: &ModelId, edge_len: u64, cand: &ModelId) -> bool {
        DomainAdapter::reach_contains(self, *s, *fb, edge_len, *cand)
    }
}

/// Sample and iteration budget for [`sampled_median`].
#[derive(Debug, Clone, Copy)]
pub struct SampleBudget {
    /// Number of models drawn from the weight distribution.
    pub samples: usize,
    /// Cap on local-search moves before giving up.
    pub max_moves: usize,
}

impl SampleBudget {
    /// Budget sized so that, by a Hoeffding + union bound over the edges
    /// examined, every reach-fraction estimate is within ε′ = ε/3 of truth
    /// with high probability: `r = ⌈8·ln(40·D·T)/ε′²⌉` samples where `D` is
    /// the maximum feedback degree and `T = ⌈diameter/(2ε′·w_min)⌉ + 1` the
    /// move cap (each accepted move provably lowers Γ by at least
    /// `2ε′·w_min`).
    pub fn certified(max_degree: usize, diameter: u64, min_edge_len: u64, eps: f64) -> Self {
        assert!(eps > 0.0);
        let eps_p = eps / 3.0;
        let max_moves = (diameter as f64 / (2.0 * eps_p * min_edge_len as f64)).ceil() as usize + 1;
        let samples =
            (8.0 * (40.0 * max_degree as f64 * max_moves as f64).ln() / (eps_p * eps_p)).ceil()
                as usize;
        SampleBudget { samples, max_moves }
    }
}

/// Approximate median by local search over sampled models.
///
/// Draws `budget.samples` models from `sample` once, then walks from
/// `start`: for each feedback edge it estimates the sampled fraction lying
/// in the edge's reach set and crosses any edge whose fraction exceeds
/// `½ + Δ + 2ε′` (largest fraction first, smaller model on ties), stopping
/// when no edge qualifies. With a sampler within total-variation `Δ < ¼` of
/// the weight distribution, the returned model has `Φ ≤ ½ + 2Δ + ε` with
/// high probability. The single sample batch is reused across moves; the
/// union bound in [`SampleBudget::certified`] covers every edge the walk can
/// examine.
pub fn sampled_median<S: LocalSearchSpace + ?Sized>(
    space: &S,
    sample: &mut dyn FnMut(&mut ChaCha8Rng) -> S::Model,
    start: S::Model,
    delta: f64,
    eps: f64,
    budget: &SampleBudget,
    rng: &mut ChaCha8Rng,
) -> Result<S::Model, Error> {
    if !(0.0..0.25).contains(&delta) {
        return Err(Error::InvalidParameter(
            "sampler bias delta must be in [0, 1/4)".into(),
        ));
    }
    let samples: Vec<S::Model> = (0..budget.samples).map(|_| sample(rng)).collect();
    let threshold = 0.5 + delta + 2.0 * eps / 3.0;
    let mut s = start;
    for _ in 0..=budget.max_moves {
        let mut best: Option<(f64, S::Model)> = None;
        for (fb, edge_len) in space.feedback_edges(&s) {
            if fb == s {
                continue;
            }
            let hits = samples
                .iter()
                .filter(|m| space.reach_contains(&s, &fb, edge_len, m))
                .count();
            let q = hits as f64 / samples.len() as f64;
            if q > threshold {
                let better = match &best {
                    None => true,
                    Some((bq, bm)) => q > *bq || (q == *bq && fb < *bm),
                };
                if better {
                    best = Some((q, fb));
                }
            }
        }
        match best {
            None => return Ok(s),
            Some((_, fb)) => s = fb,
        }
    }
    Err(Error::IterationCapExceeded)
}

/// Exact sampler over an explicit weighted support (inverse-CDF); gives
/// `Δ = 0` when plugged into [`sampled_median`].
pub struct WeightSampler {
    support: Vec<ModelId>,
    cumulative: Vec<f64>,
}

impl WeightSampler {
    pub fn new(support: &[ModelId], weights: &[f64]) -> Result<Self, Error> {
        assert_eq!(support.len(), weights.len());
        let mut cumulative = Vec::with_capacity(weights.len());
        let mut acc = 0.0;
        for &w in weights {
            acc += w;
            cumulative.push(acc);
        }
        if acc <= 0.0 {
            return Err(Error::ZeroTotalWeight);
        }
        Ok(WeightSampler {
            support: support.to_vec(),
            cumulative,
        })
    }

    pub fn draw(&self, rng: &mut ChaCha8Rng) -> ModelId {
        let total = *self.cumulative.last().unwrap();
        let x = rng.random::<f64>() * total;
        let i = self.cumulative.partition_point(|&c| c <= x);
        self.support[i.min(self.support.len() - 1)]
    }
}

/// Median strategy running [`sampled_median`] with the exact
/// [`WeightSampler`], starting from the heaviest support model
/// (smallest id on ties).
pub struct SampledLocalSearch {
    pub eps: f64,
    pub budget: SampleBudget,
}

impl<A: DomainAdapter + ?Sized> MedianSelector<A> for SampledLocalSearch {
    fn select(
        &mut self,
        adapter: &A,
        support: &[ModelId],
        weights: &[f64],
        rng: &mut ChaCha8Rng,
    ) -> ModelId {
        let sampler = WeightSampler::new(support, weights).expect("zero total weight");
        let mut start = support[0];
        let mut best_w = f64::NEG_INFINITY;
        for (&m, &w) in support.iter().zip(weights) {
            if w > best_w {
                best_w = w;
                start = m;
            }
        }
        let mut draw = |rng: &mut ChaCha8Rng| sampler.draw(rng);
        sampled_median(adapter, &mut draw, start, 0.0, self.eps, &self.budget, rng)
            .expect("local search exceeded its certified move cap")
    }
}
