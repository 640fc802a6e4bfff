//! Query-quality potentials and the exact (enumerating) median.
//!
//! Querying a model `s` is good when no single response can leave much
//! consistent mass behind. `potential` measures exactly that worst case;
//! `gamma_potential` is the weighted-distance surrogate whose minimizer
//! provably keeps the potential at or below ½ on undirected graphs (and
//! `(c−1)/c` on directed graphs with cycle-ratio `c`).

use crate::adapter::DomainAdapter;
use crate::error::Error;
use crate::graph::ModelId;

/// Worst-case consistent weight fraction after querying `s`:
/// `Φ_w(s) = max over feedback edges (s, s′), s′ ≠ s, of w(Reach(s, s′)) / w(Σ)`.
///
/// `weights[i]` is the weight of `support[i]`; models outside the support
/// carry zero weight.
pub fn potential<A: DomainAdapter + ?Sized>(
    adapter: &A,
    support: &[ModelId],
    weights: &[f64],
    s: ModelId,
) -> Result<f64, Error> {
    assert_eq!(support.len(), weights.len());
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return Err(Error::ZeroTotalWeight);
    }
    let mut worst = 0.0_f64;
    for (fb, edge_len) in adapter.feedback_edges(s) {
        if fb == s {
            continue;
        }
        let mass: f64 = support
            .iter()
            .zip(weights)
            .filter(|&(&m, _)| adapter.reach_contains(s, fb, edge_len, m))
            .map(|(_, &w)| w)
            .sum();
        worst = worst.max(mass / total);
    }
    Ok(worst)
}

/// Weighted distance sum `Γ(s) = Σ_i d(s, support[i]) · weights[i]`
/// (unnormalized).
pub fn gamma_potential<A: DomainAdapter + ?Sized>(
    adapter: &A,
    support: &[ModelId],
    weights: &[f64],
    s: ModelId,
) -> f64 {
    assert_eq!(support.len(), weights.len());
    support
        .iter()
        .zip(weights)
        .map(|(&m, &w)| adapter.distance(s, m) as f64 * w)
        .sum()
}

/// Scans every model of an enumerable domain and returns the Γ-minimizer
/// (smallest id on ties) together with its realized potential. On
/// undirected domains the returned potential is guaranteed ≤ ½; on directed
/// domains with cycle-ratio `c`, ≤ (c−1)/c.
pub fn exact_median<A: DomainAdapter + ?Sized>(
    adapter: &A,
    support: &[ModelId],
    weights: &[f64],
) -> Result<(ModelId, f64), Error> {
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return Err(Error::ZeroTotalWeight);
    }
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
    let phi = potential(adapter, support, weights, best)?;
    Ok((best, phi))
}
