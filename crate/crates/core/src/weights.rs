//! Multiplicative likelihood weights, stored as integer response counts.
//!
//! A model that agreed with `a` of the `K` responses so far carries weight
//! `p^a · (1−p)^{K−a}`. Weights are never formed by repeated floating-point
//! multiplication: the counts are exact, and relative weights are recovered
//! in log-space on demand, so runs of thousands of rounds cannot underflow.

use crate::adapter::DomainAdapter;
use crate::graph::ModelId;

/// Per-model consistent-response counts over a fixed support set.
#[derive(Debug, Clone)]
pub struct LikelihoodState {
    p: f64,
    rounds: u32,
    support: Vec<ModelId>,
    consistent: Vec<u32>,
}

impl LikelihoodState {
    /// Starts with uniform weights (zero responses) over `support`.
    /// Requires `p ∈ (½, 1]`.
    pub fn new(support: Vec<ModelId>, p: f64) -> Self {
        assert!(p > 0.5 && p <= 1.0, "noise parameter must be in (1/2, 1]");
        let consistent = vec![0; support.len()];
        LikelihoodState {
            p,
            rounds: 0,
            support,
            consistent,
        }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn rounds(&self) -> u32 {
        self.rounds
    }

    pub fn support(&self) -> &[ModelId] {
        &self.support
    }

    pub fn consistent_count(&self, i: usize) -> u32 {
        self.consistent[i]
    }

    /// Records one response `fb` to a query of `query`, bumping the count of
    /// every support model consistent with it.
    pub fn record_response<A: DomainAdapter + ?Sized>(
        &mut self,
        adapter: &A,
        query: ModelId,
        fb: ModelId,
    ) {
        let edge_len = if fb == query {
            0
        } else {
            adapter
                .feedback_edge_len(query, fb)
                .expect("response is not a feedback edge")
        };
        self.rounds += 1;
        for (i, &m) in self.support.iter().enumerate() {
            if adapter.reach_contains(query, fb, edge_len, m) {
                self.consistent[i] += 1;
            }
        }
    }

    /// Unnormalized log-weight `a·ln p + (K−a)·ln(1−p)` of support index `i`.
    /// `−∞` for models ruled out when `p = 1`.
    pub fn log_weight(&self, i: usize) -> f64 {
        let a = f64::from(self.consistent[i]);
        let b = f64::from(self.rounds - self.consistent[i]);
        if self.p == 1.0 {
            return if b == 0.0 { 0.0 } else { f64::NEG_INFINITY };
        }
        a * self.p.ln() + b * (1.0 - self.p).ln()
    }

    /// Relative weights over the support, normalized to sum to 1.
    /// Computed by exponentiating count differences against the maximum
    /// log-weight, so only negligibly small weights can flush to zero.
    pub fn weights(&self) -> Vec<f64> {
        if self.p == 1.0 {
            // Degenerate consistent-set form: survivors share the mass.
            let alive = self
                .consistent
                .iter()
                .filter(|&&a| a == self.rounds)
                .count();
            return self
                .consistent
                .iter()
                .map(|&a| {
                    if a == self.rounds {
                        1.0 / alive as f64
                    } else {
                        0.0
                    }
                })
                .collect();
        }
        // log w_i = K·ln(1−p) + a_i·ln(p/(1−p)); the shared term cancels.
        let slope = (self.p / (1.0 - self.p)).ln();
        let a_max = self.consistent.iter().copied().max().unwrap_or(0);
        let mut w: Vec<f64> = self
            .consistent
            .iter()
            .map(|&a| ((f64::from(a) - f64::from(a_max)) * slope).exp())
            .collect();
        let total: f64 = w.iter().sum();
        for x in &mut w {
            *x /= total;
        }
        w
    }
}
