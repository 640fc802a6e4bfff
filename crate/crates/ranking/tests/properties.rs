//! Randomized invariants for the ranking domains.

use eqgraph_core::{DomainAdapter, ModelId};
use eqgraph_ranking::{
    factorial, forced_query_floor, AdjacentSwapDomain, BlockMoveDomain, LowerBoundAdversary,
    Permutation, SwapFeedback, SwapResponder,
};
use proptest::prelude::*;

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    (0..factorial(n)).prop_map(move |r| Permutation::from_lehmer(ModelId(r), n))
}

proptest! {
    #[test]
    fn kendall_tau_is_a_metric(
        (a, b, c) in (2usize..=6).prop_flat_map(|n| (arb_perm(n), arb_perm(n), arb_perm(n)))
    ) {
        prop_assert_eq!(a.kendall_tau(&b), b.kendall_tau(&a));
        prop_assert_eq!(a.kendall_tau(&a), 0);
        prop_assert!(a.kendall_tau(&c) <= a.kendall_tau(&b) + b.kendall_tau(&c));
    }

    #[test]
    fn block_move_length_equals_distance_gain(
        (p, i, j) in (3usize..=6)
            .prop_flat_map(|n| (arb_perm(n), 1..n))
            .prop_flat_map(|(p, i)| (Just(p), Just(i), 0..i))
    ) {
        // Moving the i-th item before the j-th fixes exactly i − j pairs.
        let q = p.shift(i, j);
        prop_assert_eq!(p.kendall_tau(&q), (i - j) as u64);
    }

    #[test]
    fn lehmer_rank_round_trips(n in 2usize..=8, r in 0usize..40320) {
        let r = r % factorial(n);
        let p = Permutation::from_lehmer(ModelId(r), n);
        prop_assert_eq!(p.lehmer_rank(), ModelId(r));
    }

    #[test]
    fn swap_reach_override_matches_distance_rule(
        (s_idx, k, c_idx) in (0usize..120, 0usize..4, 0usize..120)
    ) {
        let n = 5;
        let dom = AdjacentSwapDomain::new(n);
        let s = ModelId(s_idx);
        let fb = Permutation::from_lehmer(s, n).swap_adjacent(k).lehmer_rank();
        let cand = ModelId(c_idx);
        let by_pairs = dom.reach_contains(s, fb, 1, cand);
        let by_distance =
            dom.distance(s, cand) == 1 + dom.distance(fb, cand);
        prop_assert_eq!(by_pairs, by_distance);
    }

    #[test]
    fn block_move_reach_override_matches_distance_rule(
        (s_idx, e, c_idx) in (0usize..24, 0usize..6, 0usize..24)
    ) {
        let n = 4;
        let dom = BlockMoveDomain::new(n);
        let s = ModelId(s_idx);
        let (fb, w) = dom.feedback_edges(s)[e];
        let cand = ModelId(c_idx);
        let by_pairs = dom.reach_contains(s, fb, w, cand);
        let by_distance = dom.distance(s, cand) == w + dom.distance(fb, cand);
        prop_assert_eq!(by_pairs, by_distance);
    }

    #[test]
    fn adversary_is_consistent_for_any_starting_query(start in arb_perm(8)) {
        let n = 8;
        let mut adv = LowerBoundAdversary::new(n);
        let mut query = start;
        let mut rounds = 0usize;
        loop {
            match adv.respond(&query) {
                SwapFeedback::Confirm => break,
                SwapFeedback::Inverted(k) => {
                    query = query.swap_adjacent(k);
                    rounds += 1;
                    prop_assert!(rounds <= n * (n - 1) / 2, "too many responses");
                }
            }
        }
        prop_assert!(rounds >= forced_query_floor(n));
        let committed = adv.committed_ranking().unwrap();
        prop_assert_eq!(&committed, &query);
        prop_assert!(adv.transcript_consistent_with(&committed));
    }
}
