//! Permutations of `n` items (labels `0..n−1`), Kendall-τ distance, and
//! the factorial-number-system (Lehmer) encoding used to address
//! permutations by dense integer ids.

use eqgraph_core::ModelId;

/// An arrangement of the labels `0..n−1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    items: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            items: (0..n).collect(),
        }
    }

    /// Validates bijectivity.
    pub fn from_items(items: Vec<usize>) -> Option<Self> {
        let n = items.len();
        let mut seen = vec![false; n];
        for &x in &items {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { items })
    }

    pub fn n(&self) -> usize {
        self.items.len()
    }

    pub fn items(&self) -> &[usize] {
        &self.items
    }

    /// Label at position `pos`.
    pub fn item_at(&self, pos: usize) -> usize {
        self.items[pos]
    }

    /// Position of `label`.
    pub fn position_of(&self, label: usize) -> usize {
        self.items.iter().position(|&x| x == label).unwrap()
    }

    /// All label positions at once (inverse permutation).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.items.len()];
        for (i, &x) in self.items.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }

    /// New permutation with positions `pos` and `pos + 1` swapped.
    pub fn swap_adjacent(&self, pos: usize) -> Permutation {
        let mut items = self.items.clone();
        items.swap(pos, pos + 1);
        Permutation { items }
    }

    /// Moves the element at position `i` before position `j` (`j < i`),
    /// shifting the elements at `j..i` one place to the right — the
    /// block-move correction of a "clicked the i-th result" response.
    pub fn shift(&self, i: usize, j: usize) -> Permutation {
        assert!(j < i && i < self.items.len());
        let mut items = self.items.clone();
        let moved = items.remove(i);
        items.insert(j, moved);
        Permutation { items }
    }

    /// Number of discordant pairs between `self` and `other`.
    pub fn kendall_tau(&self, other: &Permutation) -> u64 {
        assert_eq!(self.n(), other.n(), "permutation size mismatch");
        let pos = other.positions();
        let mut inversions = 0;
        for a in 0..self.items.len() {
            for b in (a + 1)..self.items.len() {
                if pos[self.items[a]] > pos[self.items[b]] {
                    inversions += 1;
                }
            }
        }
        inversions
    }

    /// Dense id in `0..n!` via the Lehmer code (only valid for `n ≤ 20`,
    /// where `n!` fits in a `u64`).
    pub fn lehmer_rank(&self) -> ModelId {
        let n = self.items.len();
        assert!(n <= 20, "n! does not fit in a machine word beyond n = 20");
        let mut rank: usize = 0;
        for i in 0..n {
            let smaller_later = self.items[(i + 1)..]
                .iter()
                .filter(|&&x| x < self.items[i])
                .count();
            rank = rank * (n - i) + smaller_later;
        }
        ModelId(rank)
    }

    /// Inverse of [`lehmer_rank`](Permutation::lehmer_rank).
    pub fn from_lehmer(id: ModelId, n: usize) -> Permutation {
        assert!(n <= 20);
        let mut digits = vec![0usize; n];
        let mut r = id.index();
        for i in (0..n).rev() {
            digits[i] = r % (n - i);
            r /= n - i;
        }
        assert_eq!(r, 0, "rank out of range");
        let mut pool: Vec<usize> = (0..n).collect();
        let items = digits.into_iter().map(|d| pool.remove(d)).collect();
        Permutation { items }
    }

    /// All `n!` permutations in Lehmer-rank order (small `n` only).
    pub fn enumerate(n: usize) -> Vec<Permutation> {
        let count: usize = (1..=n).product();
        (0..count)
            .map(|r| Permutation::from_lehmer(ModelId(r), n))
            .collect()
    }
}

/// Number of discordant pairs; free-function form.
pub fn kendall_tau(a: &Permutation, b: &Permutation) -> u64 {
    a.kendall_tau(b)
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_distance_is_zero() {
        let id = Permutation::identity(3);
        assert_eq!(id.kendall_tau(&id), 0);
    }

    #[test]
    fn one_adjacent_inversion() {
        let a = Permutation::from_items(vec![1, 0, 2]).unwrap();
        assert_eq!(a.kendall_tau(&Permutation::identity(3)), 1);
    }

    #[test]
    fn full_reversal_counts_all_pairs() {
        let rev = Permutation::from_items(vec![4, 3, 2, 1, 0]).unwrap();
        assert_eq!(rev.kendall_tau(&Permutation::identity(5)), 10);
    }

    #[test]
    fn lehmer_round_trips_for_small_n() {
        for n in 1..=5 {
            for (expect, p) in Permutation::enumerate(n).into_iter().enumerate() {
                assert_eq!(p.lehmer_rank().index(), expect);
                assert_eq!(Permutation::from_lehmer(ModelId(expect), n), p);
            }
        }
    }

    #[test]
    fn lehmer_rank_orders_lexicographically() {
        assert_eq!(Permutation::identity(4).lehmer_rank().index(), 0);
        let last = Permutation::from_items(vec![3, 2, 1, 0]).unwrap();
        assert_eq!(last.lehmer_rank().index(), 23);
    }

    #[test]
    fn shift_moves_a_block() {
        let p = Permutation::identity(3);
        // Move the element at position 2 to the front.
        assert_eq!(p.shift(2, 0).items(), &[2, 0, 1]);
    }

    #[test]
    fn bad_item_lists_rejected() {
        assert!(Permutation::from_items(vec![0, 0, 1]).is_none());
        assert!(Permutation::from_items(vec![0, 3]).is_none());
    }
}
