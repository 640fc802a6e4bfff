//! A hardness witness for rankings when a user may flag *any* wrong-order
//! pair (not just adjacent ones): a small family of rankings and a response
//! rule under which every possible query leaves all but one candidate
//! alive, so no query can have small potential.
//!
//! The family is the `n` cyclic rotations of the identity with uniform
//! weight. For any query, the rule finds either a consecutive label pair
//! `(a, a+1)` appearing out of order, or falls back to the pair `(0, n−1)`
//! when the query is the identity; in both cases exactly one rotation
//! agrees with the query on that pair, so the response keeps `n − 1` of the
//! `n` rotations and the query's potential is at least `(n−1)/n`.

use crate::perm::Permutation;

/// Response "the query's relative order of `first` and `second` is wrong",
/// where `first` appears before `second` in the query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairResponse {
    pub first: usize,
    pub second: usize,
}

impl PairResponse {
    /// Whether `cand` is consistent with this response (orders the pair the
    /// other way round).
    pub fn consistent_with(&self, cand: &Permutation) -> bool {
        cand.position_of(self.second) < cand.position_of(self.first)
    }
}

/// The `n` cyclic rotations `⟨i, i+1, …, n−1, 0, …, i−1⟩` of the identity.
pub fn cyclic_rotations(n: usize) -> Vec<Permutation> {
    (0..n)
        .map(|i| {
            Permutation::from_items((0..n).map(|k| (i + k) % n).collect()).unwrap()
        })
        .collect()
}

/// The witness response to `query`: flags `(a+1, a)` for the smallest label
/// `a` whose successor label precedes it, or `(0, n−1)` when the query is
/// the identity.
pub fn witness_response(query: &Permutation) -> PairResponse {
    let n = query.n();
    let pos = query.positions();
    for a in 0..n - 1 {
        if pos[a + 1] < pos[a] {
            return PairResponse {
                first: a + 1,
                second: a,
            };
        }
    }
    // All consecutive label pairs are in order, so the query is the identity.
    PairResponse {
        first: 0,
        second: n - 1,
    }
}

/// How many of the `n` rotations survive the witness response to `query`.
pub fn surviving_rotations(n: usize, query: &Permutation) -> usize {
    let r = witness_response(query);
    cyclic_rotations(n)
        .iter()
        .filter(|c| r.consistent_with(c))
        .count()
}

/// Checks the witness exhaustively: for every query over `n` items the
/// response keeps exactly `n − 1` rotations, i.e. the best achievable
/// potential against this family is at least `(n−1)/n`. Enumerates all
/// `n!` queries; small `n` only.
pub fn verify_witness(n: usize) -> bool {
    assert!(n >= 2);
    Permutation::enumerate(n)
        .iter()
        .all(|q| surviving_rotations(n, q) == n - 1)
}
