//! Reference query bounds for the summary and CSV: the exact noiseless
//! ceiling and the leading term of the noisy bound.

use eqgraph_core::entropy;
use eqgraph_ranking::forced_query_floor;

use crate::config::{DomainKind, ExperimentConfig, MedianKind, OracleKind};

/// Per-round potential guarantee `β` of the configured median strategy on
/// the configured domain.
pub fn beta_for(config: &ExperimentConfig) -> f64 {
    match config.median {
        MedianKind::GammaExact | MedianKind::PhiExact => {
            if config.domain == DomainKind::ClusteringUnspecified {
                // Directed graph: Γ-argmin certifies (c−1)/c with
                // cycle-ratio c = 3n.
                let c = 3.0 * config.n as f64;
                (c - 1.0) / c
            } else {
                0.5
            }
        }
        MedianKind::GreedyClustering => 0.5,
        MedianKind::HyperplaneLp => {
            let d = config.d as f64;
            (d + 1.0) / (d + 2.0)
        }
        // Sampled local search certifies ½ + Δ + ε with the default
        // sampler bias Δ = 0.05 and slack ε = 0.1.
        MedianKind::Sampled => 0.65,
    }
}

/// Reference bound for a run over an initial candidate set of size `n0`.
///
/// Noiseless (`p = 1`): the exact ceiling `⌈log_{1/β} n0⌉`. Noisy: the
/// leading term `(1−δ)·log₂ n0 / (log₂(1/τ) − H(p))` with
/// `τ = βp + (1−β)(1−p)` — a reference line only, since the lower-order
/// terms are omitted. Adversary mode: the forced-query floor, a lower
/// bound instead of a ceiling.
pub fn theoretical_bound(config: &ExperimentConfig, n0: usize) -> f64 {
    if config.oracle == OracleKind::Adversary {
        return forced_query_floor(config.n) as f64;
    }
    let beta = beta_for(config);
    if n0 <= 1 {
        return 0.0;
    }
    if config.p >= 1.0 {
        ((n0 as f64).ln() / (1.0 / beta).ln()).ceil()
    } else {
        let tau = beta * config.p + (1.0 - beta) * (1.0 - config.p);
        let denom = (1.0 / tau).log2() - entropy(config.p);
        (1.0 - config.delta) * (n0 as f64).log2() / denom
    }
}
