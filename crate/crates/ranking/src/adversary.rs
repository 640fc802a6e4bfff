//! An adaptive adversary for the adjacent-swap ranking game. It answers
//! equivalence queries without ever fixing a target up front, keeping its
//! answers consistent with at least one ranking while forcing any learner
//! to spend `⌊n/4⌋ + 2·Q(⌊n/2⌋)` queries before it will confirm.
//!
//! The construction works in two phases per block of labels. While a block
//! is in its marking phase the adversary always finds an adjacent pair of
//! yet-unmarked labels in the query and declares it inverted, marking one
//! label "late" and the other "early" (a pigeonhole argument guarantees
//! such a pair exists for the first `⌊m/4⌋` rounds). Once the budget is
//! spent the block commits to a balanced split — all "early" labels before
//! all "late" labels — and recurses into the two halves. It confirms only
//! when every block is fully committed and the query equals the unique
//! surviving ranking.

use crate::perm::Permutation;

/// A response to an equivalence query over rankings with adjacent-swap
/// feedback.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapFeedback {
    /// The query is the target.
    Confirm,
    /// The items at positions `pos` and `pos + 1` of the query are in the
    /// wrong order.
    Inverted(usize),
}

/// Anything that can answer ranking queries with adjacent-swap feedback.
pub trait SwapResponder {
    fn respond(&mut self, query: &Permutation) -> SwapFeedback;
}

/// Noiseless fixed-target responder; flags the leftmost inverted adjacent
/// pair.
pub struct FixedTargetResponder {
    target: Permutation,
}

impl FixedTargetResponder {
    pub fn new(target: Permutation) -> Self {
        FixedTargetResponder { target }
    }
}

impl SwapResponder for FixedTargetResponder {
    fn respond(&mut self, query: &Permutation) -> SwapFeedback {
        let pos = self.target.positions();
        for k in 0..query.n().saturating_sub(1) {
            if pos[query.item_at(k)] > pos[query.item_at(k + 1)] {
                return SwapFeedback::Inverted(k);
            }
        }
        SwapFeedback::Confirm
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mark {
    None,
    Early,
    Late,
}

#[derive(Debug)]
enum Node {
    /// Marking phase over `elements`; `marks` runs parallel to `elements`.
    Marking {
        elements: Vec<usize>,
        marks: Vec<Mark>,
        rounds_done: usize,
    },
    /// Committed split: everything in `front` precedes everything in `back`.
    Split { front: Box<Node>, back: Box<Node> },
    /// At most one element; nothing left to decide.
    Leaf { elements: Vec<usize> },
}

impl Node {
    fn new(elements: Vec<usize>) -> Node {
        if elements.len() <= 1 {
            Node::Leaf { elements }
        } else {
            let marks = vec![Mark::None; elements.len()];
            Node::Marking {
                elements,
                marks,
                rounds_done: 0,
            }
        }
    }

    fn len(&self) -> usize {
        match self {
            Node::Marking { elements, .. } => elements.len(),
            Node::Leaf { elements } => elements.len(),
            Node::Split { front, back } => front.len() + back.len(),
        }
    }

    fn committed(&self) -> bool {
        match self {
            Node::Leaf { .. } => true,
            Node::Marking { .. } => false,
            Node::Split { front, back } => front.committed() && back.committed(),
        }
    }

    fn committed_order(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf { elements } => out.extend_from_slice(elements),
            Node::Split { front, back } => {
                front.committed_order(out);
                back.committed_order(out);
            }
            Node::Marking { .. } => panic!("block not committed yet"),
        }
    }

    /// Splits a marking block: "late" labels go in front, "early" labels in
    /// back, unmarked labels (smallest first) fill whichever half is
    /// smaller, front on ties, until the front holds ⌈m/2⌉ labels.
    fn commit_split(elements: &[usize], marks: &[Mark]) -> Node {
        let m = elements.len();
        let front_size = m.div_ceil(2);
        let mut front: Vec<usize> = elements
            .iter()
            .zip(marks)
            .filter(|&(_, &mk)| mk == Mark::Late)
            .map(|(&e, _)| e)
            .collect();
        let mut back: Vec<usize> = elements
            .iter()
            .zip(marks)
            .filter(|&(_, &mk)| mk == Mark::Early)
            .map(|(&e, _)| e)
            .collect();
        let mut unmarked: Vec<usize> = elements
            .iter()
            .zip(marks)
            .filter(|&(_, &mk)| mk == Mark::None)
            .map(|(&e, _)| e)
            .collect();
        unmarked.sort_unstable();
        for e in unmarked {
            if front.len() < front_size {
                front.push(e);
            } else {
                back.push(e);
            }
        }
        debug_assert_eq!(front.len(), front_size);
        Node::Split {
            front: Box::new(Node::new(front)),
            back: Box::new(Node::new(back)),
        }
    }

    /// Answers for the sub-order of this block's elements as they appear in
    /// the query. Returns the reported pair `(x, y)` — `x` appears directly
    /// before `y` in `sub_order` and the adversary declares them inverted —
    /// or `None` when the sub-order is consistent with every commitment.
    fn respond(&mut self, sub_order: &[usize]) -> Option<(usize, usize)> {
        if let Node::Marking {
            elements,
            marks,
            rounds_done,
        } = self
        {
            let budget = elements.len() / 4;
            if *rounds_done < budget {
                let mark_of =
                    |e: usize| marks[elements.iter().position(|&x| x == e).unwrap()];
                let pair = sub_order
                    .windows(2)
                    .find(|w| mark_of(w[0]) == Mark::None && mark_of(w[1]) == Mark::None)
                    .map(|w| (w[0], w[1]));
                // Fewer than ⌊m/4⌋ rounds leave more than ⌈m/2⌉ unmarked
                // labels, so two of them must be adjacent.
                let (x, y) = pair.expect("an unmarked adjacent pair must exist");
                marks[elements.iter().position(|&e| e == x).unwrap()] = Mark::Early;
                marks[elements.iter().position(|&e| e == y).unwrap()] = Mark::Late;
                *rounds_done += 1;
                return Some((x, y));
            }
            let split = Node::commit_split(elements, marks);
            *self = split;
        }
        match self {
            Node::Leaf { .. } => None,
            Node::Marking { .. } => unreachable!("marking phase handled above"),
            Node::Split { front, back } => {
                let mut in_front = Vec::new();
                front.collect_elements(&mut in_front);
                let is_front = |e: usize| in_front.contains(&e);
                // Any front label appearing right after a back label
                // violates the committed split.
                if let Some(w) = sub_order
                    .windows(2)
                    .find(|w| !is_front(w[0]) && is_front(w[1]))
                {
                    return Some((w[0], w[1]));
                }
                // The split is respected, so the query lists all front
                // labels first; recurse into the halves.
                let cut = front.len();
                if let Some(r) = front.respond(&sub_order[..cut]) {
                    return Some(r);
                }
                back.respond(&sub_order[cut..])
            }
        }
    }

    /// Collects this block's elements regardless of phase.
    fn collect_elements(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf { elements } => out.extend_from_slice(elements),
            Node::Marking { elements, .. } => out.extend_from_slice(elements),
            Node::Split { front, back } => {
                front.collect_elements(out);
                back.collect_elements(out);
            }
        }
    }
}

/// The adaptive lower-bound adversary. Implements [`SwapResponder`];
/// records every reported pair so transcripts can be checked for
/// consistency against the final committed ranking.
pub struct LowerBoundAdversary {
    root: Node,
    /// Reported pairs `(x, y)`: `x` appeared directly before `y` and was
    /// declared inverted, i.e. the target puts `y` before `x`.
    transcript: Vec<(usize, usize)>,
    responses: usize,
}

impl LowerBoundAdversary {
    pub fn new(n: usize) -> Self {
        LowerBoundAdversary {
            root: Node::new((0..n).collect()),
            transcript: Vec::new(),
            responses: 0,
        }
    }

    /// Number of non-confirmation responses given so far.
    pub fn responses(&self) -> usize {
        self.responses
    }

    pub fn transcript(&self) -> &[(usize, usize)] {
        &self.transcript
    }

    /// The unique ranking consistent with all commitments, once every block
    /// has committed.
    pub fn committed_ranking(&self) -> Option<Permutation> {
        if !self.root.committed() {
            return None;
        }
        let mut items = Vec::new();
        self.root.committed_order(&mut items);
        Permutation::from_items(items)
    }

    /// True when every reported pair is inverted in `target` (so the whole
    /// transcript is consistent with `target` being the ranking sought).
    pub fn transcript_consistent_with(&self, target: &Permutation) -> bool {
        let pos = target.positions();
        self.transcript.iter().all(|&(x, y)| pos[y] < pos[x])
    }
}

impl SwapResponder for LowerBoundAdversary {
    fn respond(&mut self, query: &Permutation) -> SwapFeedback {
        match self.root.respond(query.items()) {
            Some((x, y)) => {
                self.responses += 1;
                self.transcript.push((x, y));
                let k = query.position_of(x);
                debug_assert_eq!(query.item_at(k + 1), y);
                SwapFeedback::Inverted(k)
            }
            None => {
                // Consistent everywhere means every block is committed and
                // the query is the one surviving ranking.
                debug_assert_eq!(self.committed_ranking().as_ref(), Some(query));
                SwapFeedback::Confirm
            }
        }
    }
}

/// Query floor forced by the adversary: `Q(n) = ⌊n/4⌋ + 2·Q(⌊n/2⌋)`,
/// `Q(n) = 0` for `n < 4`.
pub fn forced_query_floor(n: usize) -> usize {
    if n < 4 {
        0
    } else {
        n / 4 + 2 * forced_query_floor(n / 2)
    }
}
