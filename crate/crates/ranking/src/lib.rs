//! Ranking domains for interactive learning from wrong-order feedback:
//! permutation spaces with adjacent-swap and block-move responses, exact
//! and sampled median selection, linear-extension sampling, a query
//! lower-bound adversary, and a hardness witness for arbitrary-pair
//! feedback.

pub mod adversary;
pub mod constraints;
pub mod domains;
pub mod efficient;
pub mod median;
pub mod perm;
pub mod strategies;
pub mod witness;

pub use adversary::{
    forced_query_floor, FixedTargetResponder, LowerBoundAdversary, SwapFeedback, SwapResponder,
};
pub use constraints::{
    count_extensions, default_chain_steps, enumerate_extensions, pairwise_extension_counts,
    sample_linear_extension, ConstraintConflict, PartialOrderConstraints,
};
pub use domains::{adjacent_swap_graph, block_move_graph, AdjacentSwapDomain, BlockMoveDomain};
pub use efficient::{learn_ranking_sampled, AdjacentSwapSpace, SampledRankerParams};
pub use median::{
    gamma_argmin_pairs, gamma_of, pair_costs, pair_costs_from_ids, PairDecompositionMedian,
};
pub use perm::{factorial, kendall_tau, Permutation};
pub use strategies::{play_ranking_game, GameOutcome, RankingStrategy};
pub use witness::{
    cyclic_rotations, surviving_rotations, verify_witness, witness_response, PairResponse,
};
