//! Simulated users: respond to an equivalence query with a confirmation or
//! a feedback edge, correctly with probability `p` and per a configurable
//! noise model otherwise.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::adapter::DomainAdapter;
use crate::graph::ModelId;

/// How a wrong response is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseModel {
    /// Uniformly random over the query's feedback edges plus a false
    /// confirmation.
    Uniform,
    /// The response leaving the largest consistent weight behind.
    Adversarial,
    /// Always a (false) confirmation.
    ConfirmSpam,
}

/// How a correct response is chosen when several feedback edges lie on
/// shortest paths to the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidChoice {
    /// Uniformly at random among the valid edges.
    UniformValid,
    /// The valid edge leaving the largest consistent weight behind
    /// (worst case for the learner).
    AdversarialValid,
}

/// A responder to equivalence queries. Returning the query itself means
/// "correct". `support`/`weights` describe the learner's current belief and
/// are consulted only by the adversarial variants.
pub trait Oracle {
    fn respond(&mut self, query: ModelId, support: &[ModelId], weights: &[f64]) -> ModelId;
}

/// The standard simulated user over any domain adapter.
pub struct SimulatedUser<'a, A: DomainAdapter + ?Sized> {
    adapter: &'a A,
    target: ModelId,
    p: f64,
    noise: NoiseModel,
    valid_choice: ValidChoice,
    rng: ChaCha8Rng,
}

impl<'a, A: DomainAdapter + ?Sized> SimulatedUser<'a, A> {
    pub fn new(
        adapter: &'a A,
        target: ModelId,
        p: f64,
        noise: NoiseModel,
        valid_choice: ValidChoice,
        rng: ChaCha8Rng,
    ) -> Self {
        assert!(p > 0.5 && p <= 1.0, "response accuracy must be in (1/2, 1]");
        SimulatedUser {
            adapter,
            target,
            p,
            noise,
            valid_choice,
            rng,
        }
    }

    pub fn target(&self) -> ModelId {
        self.target
    }

    /// Feedback edges of `query` lying on shortest paths to the target —
    /// the legal correct responses. Empty only when `query` is the target.
    fn valid_edges(&self, query: ModelId) -> Vec<(ModelId, u64)> {
        let d = self.adapter.distance(query, self.target);
        self.adapter
            .feedback_edges(query)
            .into_iter()
            .filter(|&(fb, w)| w + self.adapter.distance(fb, self.target) == d)
            .collect()
    }

    /// Weight that would remain consistent after responding `fb`.
    fn remaining_mass(
        &self,
        query: ModelId,
        fb: ModelId,
        edge_len: u64,
        support: &[ModelId],
        weights: &[f64],
    ) -> f64 {
        support
            .iter()
            .zip(weights)
            .filter(|&(&m, _)| self.adapter.reach_contains(query, fb, edge_len, m))
            .map(|(_, &w)| w)
            .sum()
    }

    fn heaviest_response(
        &self,
        query: ModelId,
        candidates: &[(ModelId, u64)],
        support: &[ModelId],
        weights: &[f64],
    ) -> ModelId {
        let mut best = candidates[0].0;
        let mut best_mass = f64::NEG_INFINITY;
        for &(fb, w) in candidates {
            let mass = self.remaining_mass(query, fb, w, support, weights);
            if mass > best_mass || (mass == best_mass && fb < best) {
                best_mass = mass;
                best = fb;
            }
        }
        best
    }
}

impl<A: DomainAdapter + ?Sized> Oracle for SimulatedUser<'_, A> {
    fn respond(&mut self, query: ModelId, support: &[ModelId], weights: &[f64]) -> ModelId {
        let correct = self.p >= 1.0 || self.rng.random::<f64>() < self.p;
        if correct {
            if query == self.target {
                return query;
            }
            let valid = self.valid_edges(query);
            assert!(
                !valid.is_empty(),
                "feedback-graph contract violated: no valid response"
            );
            return match self.valid_choice {
                ValidChoice::UniformValid => valid[self.rng.random_range(0..valid.len())].0,
                ValidChoice::AdversarialValid => {
                    self.heaviest_response(query, &valid, support, weights)
                }
            };
        }
        match self.noise {
            NoiseModel::ConfirmSpam => query,
            NoiseModel::Uniform => {
                let edges = self.adapter.feedback_edges(query);
                let k = self.rng.random_range(0..=edges.len());
                if k == edges.len() {
                    query // false confirmation
                } else {
                    edges[k].0
                }
            }
            NoiseModel::Adversarial => {
                // Include the false confirmation (edge length 0 to self).
                let mut candidates = self.adapter.feedback_edges(query);
                candidates.push((query, 0));
                self.heaviest_response(query, &candidates, support, weights)
            }
        }
    }
}
