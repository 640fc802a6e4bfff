//! Polynomial-time ranking learner for the adjacent-swap space: no `n!`
//! enumeration anywhere. The consistent set is represented implicitly by
//! the precedence constraints collected from responses, near-uniform
//! linear extensions stand in for the weight distribution, and the next
//! query is found by sampled local search over adjacent swaps.

use eqgraph_core::{sampled_median, Error, LocalSearchSpace, SampleBudget};
use rand_chacha::ChaCha8Rng;

use crate::adversary::{SwapFeedback, SwapResponder};
use crate::constraints::{sample_linear_extension, PartialOrderConstraints};
use crate::perm::Permutation;

/// The adjacent-swap move structure on rankings, usable by local search
/// without dense ids (models are the permutations themselves).
pub struct AdjacentSwapSpace {
    n: usize,
}

impl AdjacentSwapSpace {
    pub fn new(n: usize) -> Self {
        AdjacentSwapSpace { n }
    }
}

impl LocalSearchSpace for AdjacentSwapSpace {
    type Model = Permutation;

    fn feedback_edges(&self, s: &Permutation) -> Vec<(Permutation, u64)> {
        (0..self.n.saturating_sub(1))
            .map(|k| (s.swap_adjacent(k), 1))
            .collect()
    }

    fn reach_contains(
        &self,
        s: &Permutation,
        fb: &Permutation,
        _edge_len: u64,
        cand: &Permutation,
    ) -> bool {
        if fb == s {
            return cand == s;
        }
        let k = (0..self.n - 1)
            .find(|&k| s.item_at(k) != fb.item_at(k))
            .expect("swap neighbor differs in one adjacent pair");
        let early = fb.item_at(k);
        let late = fb.item_at(k + 1);
        cand.position_of(early) < cand.position_of(late)
    }
}

/// Tuning knobs for [`learn_ranking_sampled`].
#[derive(Debug, Clone, Copy)]
pub struct SampledRankerParams {
    /// Markov-chain steps per linear-extension draw.
    pub chain_steps: usize,
    /// Assumed total-variation bias of the chain (must stay below ¼).
    pub sampler_bias: f64,
    /// Potential slack ε of the local search.
    pub eps: f64,
    /// Samples and move cap per median call.
    pub budget: SampleBudget,
}

impl SampledRankerParams {
    /// Defaults sized for the adjacent-swap space on `n` items: unit edges,
    /// diameter `n(n−1)/2`, degree `n−1`.
    pub fn for_items(n: usize) -> Self {
        let eps = 0.1;
        let diameter = (n * (n - 1) / 2) as u64;
        SampledRankerParams {
            chain_steps: crate::constraints::default_chain_steps(n),
            sampler_bias: 0.05,
            eps,
            budget: SampleBudget::certified(n.saturating_sub(1), diameter.max(1), 1, eps),
        }
    }

    /// Cheap settings for experiments and larger `n`: shorter chains and a
    /// fixed sample budget instead of the certified (union-bound) one. The
    /// learner stays correct — queries are always linear extensions — it
    /// just loses the per-call potential certificate.
    pub fn fast_for_items(n: usize) -> Self {
        SampledRankerParams {
            chain_steps: 8 * n * n + 64,
            sampler_bias: 0.05,
            eps: 0.1,
            budget: SampleBudget {
                samples: 300,
                max_moves: 3 * n * n + 16,
            },
        }
    }
}

/// Learns a ranking from adjacent-swap feedback in polynomial time.
///
/// Every query is a linear extension of the constraints gathered so far, so
/// each non-confirmation response contributes a fresh precedence pair and
/// the loop ends after at most `n(n−1)/2` responses. Queries are chosen by
/// sampled local search, which keeps the expected query count near the
/// halving bound when responses come from a fixed target.
pub fn learn_ranking_sampled(
    n: usize,
    responder: &mut dyn SwapResponder,
    params: &SampledRankerParams,
    rng: &mut ChaCha8Rng,
) -> Result<(Permutation, usize), Error> {
    let space = AdjacentSwapSpace::new(n);
    let mut constraints = PartialOrderConstraints::new(n);
    let mut queries = 0usize;
    let max_rounds = n * (n - 1) / 2 + 1;
    for _ in 0..=max_rounds {
        let query = if constraints.is_total_order() {
            constraints.topological()
        } else {
            let start = sample_linear_extension(&constraints, params.chain_steps, rng);
            let mut draw = |rng: &mut ChaCha8Rng| {
                sample_linear_extension(&constraints, params.chain_steps, rng)
            };
            sampled_median(
                &space,
                &mut draw,
                start,
                params.sampler_bias,
                params.eps,
                &params.budget,
                rng,
            )?
        };
        queries += 1;
        match responder.respond(&query) {
            SwapFeedback::Confirm => return Ok((query, queries)),
            SwapFeedback::Inverted(k) => {
                let x = query.item_at(k);
                let y = query.item_at(k + 1);
                constraints.add(y, x).map_err(|_| {
                    Error::InvalidParameter(
                        "responder contradicted an earlier response".into(),
                    )
                })?;
            }
        }
    }
    Err(Error::IterationCapExceeded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary::FixedTargetResponder;
    use rand::SeedableRng;

    #[test]
    fn swap_space_reach_is_pair_order() {
        let space = AdjacentSwapSpace::new(4);
        let s = Permutation::identity(4);
        let fb = s.swap_adjacent(1); // 0,2,1,3: wants 2 before 1
        let in_reach = Permutation::from_items(vec![2, 0, 3, 1]).unwrap();
        let out_of_reach = Permutation::from_items(vec![1, 0, 2, 3]).unwrap();
        assert!(space.reach_contains(&s, &fb, 1, &in_reach));
        assert!(!space.reach_contains(&s, &fb, 1, &out_of_reach));
        assert!(space.reach_contains(&s, &s, 1, &s));
        assert!(!space.reach_contains(&s, &s, 1, &fb));
    }

    #[test]
    fn learns_a_fixed_target() {
        let n = 5;
        let target = Permutation::from_items(vec![3, 0, 4, 2, 1]).unwrap();
        let mut responder = FixedTargetResponder::new(target.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut params = SampledRankerParams::for_items(n);
        params.chain_steps = 400;
        params.budget.samples = 400;
        let (got, queries) = learn_ranking_sampled(n, &mut responder, &params, &mut rng).unwrap();
        assert_eq!(got, target);
        assert!(queries <= n * (n - 1) / 2 + 1);
    }
}
