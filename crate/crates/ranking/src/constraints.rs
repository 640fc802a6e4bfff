//! Pairwise precedence constraints over `n` labels, kept transitively
//! closed so queries are O(1), plus exact and sampled linear-extension
//! machinery: enumeration, counting, pairwise order counts, and a
//! lazy adjacent-transposition Markov chain for near-uniform sampling.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::perm::Permutation;

/// A strict partial order on labels `0..n−1`, stored as its transitive
/// closure.
#[derive(Debug, Clone)]
pub struct PartialOrderConstraints {
    n: usize,
    /// `prec[a * n + b]` means `a` must precede `b`.
    prec: Vec<bool>,
}

impl PartialOrderConstraints {
    pub fn new(n: usize) -> Self {
        PartialOrderConstraints {
            n,
            prec: vec![false; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `a` is required to precede `b`.
    #[inline]
    pub fn requires(&self, a: usize, b: usize) -> bool {
        self.prec[a * self.n + b]
    }

    /// Records "`a` precedes `b`" and closes transitively. Fails (leaving
    /// the constraints unchanged) if the opposite is already required.
    pub fn add(&mut self, a: usize, b: usize) -> Result<(), ConstraintConflict> {
        assert!(a < self.n && b < self.n && a != b);
        if self.requires(b, a) {
            return Err(ConstraintConflict { a, b });
        }
        if self.requires(a, b) {
            return Ok(());
        }
        // Everything at or before `a` now precedes everything at or after `b`.
        let before: Vec<usize> = (0..self.n)
            .filter(|&x| x == a || self.requires(x, a))
            .collect();
        let after: Vec<usize> = (0..self.n)
            .filter(|&y| y == b || self.requires(b, y))
            .collect();
        for &x in &before {
            for &y in &after {
                self.prec[x * self.n + y] = true;
            }
        }
        Ok(())
    }

    /// Number of constrained (ordered) pairs.
    pub fn constrained_pairs(&self) -> usize {
        self.prec.iter().filter(|&&b| b).count()
    }

    /// True when every pair of labels is comparable.
    pub fn is_total_order(&self) -> bool {
        self.constrained_pairs() == self.n * (self.n - 1) / 2
    }

    /// Deterministic linear extension: repeatedly take the smallest label
    /// whose predecessors have all been placed.
    pub fn topological(&self) -> Permutation {
        let mut placed = vec![false; self.n];
        let mut items = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let next = (0..self.n)
                .find(|&x| {
                    !placed[x] && (0..self.n).all(|y| placed[y] || !self.requires(y, x))
                })
                .expect("constraint closure is acyclic");
            placed[next] = true;
            items.push(next);
        }
        Permutation::from_items(items).unwrap()
    }

    /// Whether `p` respects every constraint.
    pub fn extends(&self, p: &Permutation) -> bool {
        let pos = p.positions();
        (0..self.n).all(|a| {
            (0..self.n).all(|b| !self.requires(a, b) || pos[a] < pos[b])
        })
    }

    /// Bitmask of required predecessors per label (for `n ≤ 64`).
    pub fn predecessor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        (0..self.n)
            .map(|x| {
                (0..self.n)
                    .filter(|&y| self.requires(y, x))
                    .fold(0u64, |m, y| m | (1 << y))
            })
            .collect()
    }

    /// Bitmask of required successors per label (for `n ≤ 64`).
    pub fn successor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        (0..self.n)
            .map(|x| {
                (0..self.n)
                    .filter(|&y| self.requires(x, y))
                    .fold(0u64, |m, y| m | (1 << y))
            })
            .collect()
    }
}

/// Returned when a new constraint contradicts the existing closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstraintConflict {
    pub a: usize,
    pub b: usize,
}

impl std::fmt::Display for ConstraintConflict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "cannot require {} before {}: the reverse is already implied",
            self.a, self.b
        )
    }
}

impl std::error::Error for ConstraintConflict {}

/// Default step count for the adjacent-transposition chain: generous
/// O(n³ log n) mixing budget plus a constant floor for tiny `n`.
pub fn default_chain_steps(n: usize) -> usize {
    let nf = n as f64;
    (4.0 * nf * nf * nf * nf.ln()).ceil() as usize + 64
}

/// One near-uniform linear extension of `constraints` via a lazy
/// adjacent-transposition random walk started from the deterministic
/// topological order.
pub fn sample_linear_extension(
    constraints: &PartialOrderConstraints,
    steps: usize,
    rng: &mut ChaCha8Rng,
) -> Permutation {
    let n = constraints.n();
    let mut items = constraints.topological().items().to_vec();
    if n < 2 {
        return Permutation::from_items(items).unwrap();
    }
    for _ in 0..steps {
        // Lazy step: stay put with probability 1/2 to make the chain aperiodic.
        if rng.random::<bool>() {
            continue;
        }
        let k = rng.random_range(0..n - 1);
        if !constraints.requires(items[k], items[k + 1]) {
            items.swap(k, k + 1);
        }
    }
    Permutation::from_items(items).unwrap()
}

/// All linear extensions, in lexicographic order of their item lists.
pub fn enumerate_extensions(constraints: &PartialOrderConstraints) -> Vec<Permutation> {
    let n = constraints.n();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    fn recurse(
        c: &PartialOrderConstraints,
        prefix: &mut Vec<usize>,
        placed: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        let n = c.n();
        if prefix.len() == n {
            out.push(Permutation::from_items(prefix.clone()).unwrap());
            return;
        }
        for x in 0..n {
            if placed[x] {
                continue;
            }
            if (0..n).any(|y| !placed[y] && c.requires(y, x)) {
                continue;
            }
            placed[x] = true;
            prefix.push(x);
            recurse(c, prefix, placed, out);
            prefix.pop();
            placed[x] = false;
        }
    }
    recurse(constraints, &mut prefix, &mut placed, &mut out);
    out
}

/// Number of linear extensions, via dynamic programming over prefix sets
/// (`n ≤ 20`; counts must fit in a `u64`).
pub fn count_extensions(constraints: &PartialOrderConstraints) -> u64 {
    let n = constraints.n();
    assert!(n <= 20);
    let succ = constraints.successor_masks();
    let full: u64 = (1u64 << n) - 1;
    let mut f = vec![0u64; 1 << n];
    f[0] = 1;
    for mask in 1..=full {
        let mut total = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // `e` can be the last element of the prefix `mask` iff nothing
            // in `mask` is required to come after it.
            if succ[e] & mask == 0 {
                total += f[(mask ^ (1 << e)) as usize];
            }
        }
        f[mask as usize] = total;
    }
    f[full as usize]
}

/// `counts[a][b]` = number of linear extensions placing `a` before `b`
/// (row-major `n × n`; diagonal zero). Uses prefix/suffix DPs so the whole
/// table costs O(2ⁿ·n²).
pub fn pairwise_extension_counts(constraints: &PartialOrderConstraints) -> Vec<u64> {
    let n = constraints.n();
    assert!(n <= 20);
    let pred = constraints.predecessor_masks();
    let succ = constraints.successor_masks();
    let full: u64 = (1u64 << n) - 1;
    let size = 1usize << n;

    // f[mask]: orderings of `mask` as a prefix of an extension.
    let mut f = vec![0u64; size];
    f[0] = 1;
    for mask in 1..=full {
        let mut total = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if succ[e] & mask == 0 {
                total += f[(mask ^ (1 << e)) as usize];
            }
        }
        f[mask as usize] = total;
    }
    // h[mask]: orderings of `mask` as a suffix (everything else already placed).
    let mut h = vec![0u64; size];
    h[0] = 1;
    for mask in 1..=full {
        let mut total = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if pred[e] & mask == 0 {
                total += h[(mask ^ (1 << e)) as usize];
            }
        }
        h[mask as usize] = total;
    }

    // required[mask]: union of the predecessors of mask's elements. A mask
    // can be the set of already-placed elements only when it contains them
    // all; the f/h values of other masks are meaningless and must not be
    // combined.
    let mut required = vec![0u64; size];
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        required[mask as usize] = required[(mask & (mask - 1)) as usize] | pred[low];
    }

    // Fix the prefix at the moment `a` is placed: a's position is the last
    // slot of `mask`, everything outside comes later.
    let mut counts = vec![0u64; n * n];
    for mask in 1..=full {
        if required[mask as usize] & !mask & full != 0 {
            continue;
        }
        let rest_after = full ^ mask;
        let tail = h[rest_after as usize];
        if tail == 0 {
            continue;
        }
        let mut rest = mask;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if succ[a] & mask != 0 {
                continue;
            }
            let ways = f[(mask ^ (1 << a)) as usize] * tail;
            if ways == 0 {
                continue;
            }
            let mut later = rest_after;
            while later != 0 {
                let b = later.trailing_zeros() as usize;
                later &= later - 1;
                counts[a * n + b] += ways;
            }
        }
    }
    counts
}
