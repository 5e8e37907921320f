//! Canonical and compact canonical decomposition from a degree sequence.
//!
//! Components are always listed leftmost first: for
//! `G = G_r ∘ G_{r-1} ∘ ... ∘ G_1 ∘ G_0` the list is `[G_r, ..., G_1, G_0]`.
//! This is the bottom-to-top order of the peeling stack, where `G_0` ends up
//! on top.

use std::fmt;

use crate::degseq::{runs_from_descending, DegreeSequence, PairedDegreeSequence};

/// A pair `(p, q)` with `0 < p + q < m` certifying that the `p` largest and
/// `q` smallest degrees form a split component joined to the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoodPair {
    pub p: u64,
    pub q: u64,
}

impl GoodPair {
    pub const ISOLATED: GoodPair = GoodPair { p: 0, q: 1 };
    pub const DOMINANT: GoodPair = GoodPair { p: 1, q: 0 };
}

/// One peel of the decomposition loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeelStep {
    pub pair: GoodPair,
    /// Vertices left in the remainder after this peel; subtracted from the
    /// K-part degrees of the peeled component.
    pub alpha: u64,
    /// Sum of all earlier `p` values; subtracted from every remaining degree.
    pub beta: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Component {
    Split(PairedDegreeSequence),
    /// The rightmost component `G_0` when it was not typed by compaction.
    Tail(DegreeSequence),
}

impl Component {
    pub fn vertex_count(&self) -> u64 {
        match self {
            Component::Split(p) => p.vertex_count(),
            Component::Tail(s) => s.vertex_count(),
        }
    }

    pub fn as_split(&self) -> Option<&PairedDegreeSequence> {
        match self {
            Component::Split(p) => Some(p),
            Component::Tail(_) => None,
        }
    }

    /// Vertices of this component adjacent to everything on its right.
    fn clique_size(&self) -> u64 {
        match self {
            Component::Split(p) => p.clique_size(),
            Component::Tail(_) => 0,
        }
    }

    fn is_single_vertex_tail(&self) -> bool {
        matches!(self, Component::Tail(s) if s.vertex_count() == 1)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Split(p) => p.fmt(f),
            Component::Tail(s) => s.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionResult {
    components: Vec<Component>,
    peels: Vec<PeelStep>,
    compact: bool,
}

impl DecompositionResult {
    pub fn new(components: Vec<Component>, compact: bool) -> Self {
        DecompositionResult { components, peels: Vec::new(), compact }
    }

    /// Components leftmost first.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Peel metadata of the canonical run, in peel order (leftmost first).
    pub fn peels(&self) -> &[PeelStep] {
        &self.peels
    }

    pub fn is_compact(&self) -> bool {
        self.compact
    }

    pub fn into_components(self) -> Vec<Component> {
        self.components
    }
}

/// Lexicographically least good pair of the window `master[start..end]` with
/// every degree lowered by `beta`, or `None` if the window's graph is
/// indecomposable.
///
/// `master` must be non-increasing. Degrees are read in place, so the cost is
/// `O(p + q)` when a pair is found and `O(end - start)` otherwise.
pub fn find_good_pair(master: &[u64], start: usize, end: usize, beta: u64) -> Option<GoodPair> {
    assert!(start < end && end <= master.len(), "window must be non-empty");
    let m = (end - start) as u64;
    // 1-based effective degree inside the window.
    let deg = |t: u64| master[start + t as usize - 1] - beta;

    if m < 2 {
        return None;
    }
    if deg(m) == 0 {
        return Some(GoodPair::ISOLATED);
    }
    if deg(1) == m - 1 {
        return Some(GoodPair::DOMINANT);
    }

    let mut p: u64 = 1;
    let mut q: u64 = 0;
    let mut front = deg(1);
    let mut back: u64 = 0;
    while p + q < m && front != p * (m - q - 1) + back {
        p += 1;
        front += deg(p);
        while p + q < m && deg(m - q) < p {
            q += 1;
            back += deg(m - q + 1);
        }
    }
    if p + q < m && front == p * (m - q - 1) + back {
        Some(GoodPair { p, q })
    } else {
        None
    }
}

/// Canonical decomposition of the graph with degree sequence `seq`.
pub fn decompose(seq: &DegreeSequence) -> DecompositionResult {
    let master = seq.expand();
    let mut start = 0usize;
    let mut end = master.len();
    let mut beta: u64 = 0;
    let mut components = Vec::new();
    let mut peels = Vec::new();

    loop {
        if end - start == 1 {
            components.push(Component::Tail(DegreeSequence::from_descending([0])));
            break;
        }
        let Some(pair) = find_good_pair(&master, start, end, beta) else {
            let rest = master[start..end].iter().map(|&d| d - beta);
            components.push(Component::Tail(DegreeSequence::from_descending(rest)));
            break;
        };
        let m = (end - start) as u64;
        let alpha = m - pair.p - pair.q;
        let component = match pair {
            GoodPair::ISOLATED => PairedDegreeSequence::trivial_s(),
            GoodPair::DOMINANT => PairedDegreeSequence::trivial_k(),
            GoodPair { p, q } => {
                let (p, q) = (p as usize, q as usize);
                let k = master[start..start + p].iter().map(|&d| d - beta - alpha);
                let s = master[end - q..end].iter().map(|&d| d - beta);
                PairedDegreeSequence::new_unchecked(runs_from_descending(k), runs_from_descending(s))
            }
        };
        components.push(Component::Split(component));
        peels.push(PeelStep { pair, alpha, beta });
        start += pair.p as usize;
        end -= pair.q as usize;
        beta += pair.p;
    }

    DecompositionResult { components, peels, compact: false }
}

/// Type of a trivial or merged block, for compaction.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Block {
    Complete(u64),
    Isolated(u64),
}

fn block_of(c: &Component) -> Option<Block> {
    let p = c.as_split()?;
    p.as_complete_block()
        .map(Block::Complete)
        .or_else(|| p.as_isolated_block().map(Block::Isolated))
}

fn merge(a: Block, b: Block) -> Option<Block> {
    match (a, b) {
        (Block::Complete(x), Block::Complete(y)) => Some(Block::Complete(x + y)),
        (Block::Isolated(x), Block::Isolated(y)) => Some(Block::Isolated(x + y)),
        _ => None,
    }
}

fn block_component(b: Block) -> Component {
    Component::Split(match b {
        Block::Complete(m) => PairedDegreeSequence::complete_block(m),
        Block::Isolated(m) => PairedDegreeSequence::isolated_block(m),
    })
}

/// Compact canonical decomposition: maximal runs of consecutive same-type
/// trivial components become `((m-1)^m; -)` or `(-; 0^m)`. A single-vertex
/// `G_0` takes the type of `G_1` when `G_1` is trivial; otherwise it stays a
/// tail `(0)`.
pub fn decompose_compact(canonical: &DecompositionResult) -> DecompositionResult {
    let comps = &canonical.components;
    let mut out: Vec<Component> = Vec::with_capacity(comps.len());
    // Walk from G_0 towards the leftmost component, as when popping the stack.
    let mut iter = comps.iter().rev().peekable();

    if let Some(last) = iter.next() {
        let adopted = if last.is_single_vertex_tail() {
            match iter.peek().and_then(|c| block_of(c)) {
                Some(Block::Complete(m)) => Some(Block::Complete(m + 1)),
                Some(Block::Isolated(m)) => Some(Block::Isolated(m + 1)),
                None => None,
            }
        } else {
            None
        };
        match adopted {
            Some(b) => {
                iter.next();
                out.push(block_component(b));
            }
            None => out.push(last.clone()),
        }
    }

    for c in iter {
        let merged = match (block_of(c), out.last().and_then(block_of)) {
            (Some(b), Some(top)) => merge(b, top),
            _ => None,
        };
        match merged {
            Some(b) => {
                out.pop();
                out.push(block_component(b));
            }
            None => out.push(c.clone()),
        }
    }

    out.reverse();
    DecompositionResult { components: out, peels: canonical.peels.clone(), compact: true }
}

/// Rebuilds the degree sequence of `result`'s graph. Every vertex gains the
/// K-part sizes of all components to its left; K-part vertices also gain the
/// number of vertices to their right.
pub fn recompose_sequence(result: &DecompositionResult) -> DegreeSequence {
    let comps = &result.components;
    let mut right_of = vec![0u64; comps.len()];
    let mut acc = 0u64;
    for (i, c) in comps.iter().enumerate().rev() {
        right_of[i] = acc;
        acc += c.vertex_count();
    }

    let mut degrees = Vec::with_capacity(acc as usize);
    let mut left_clique = 0u64;
    for (i, c) in comps.iter().enumerate() {
        match c {
            Component::Split(p) => {
                for run in p.k_part() {
                    let d = run.degree + left_clique + right_of[i];
                    degrees.extend(std::iter::repeat_n(d, run.count as usize));
                }
                for run in p.s_part() {
                    let d = run.degree + left_clique;
                    degrees.extend(std::iter::repeat_n(d, run.count as usize));
                }
            }
            Component::Tail(s) => degrees.extend(s.iter_degrees().map(|d| d + left_clique)),
        }
        left_clique += c.clique_size();
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    DegreeSequence::from_descending(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(p: &[(u64, u64)]) -> DegreeSequence {
        DegreeSequence::from_pairs(p).unwrap()
    }

    fn split(k: &[(u64, u64)], s: &[(u64, u64)]) -> Component {
        Component::Split(PairedDegreeSequence::from_pairs(k, s).unwrap())
    }

    fn tail(p: &[(u64, u64)]) -> Component {
        Component::Tail(seq(p))
    }

    fn borri() -> DegreeSequence {
        seq(&[(16, 3), (12, 4), (9, 5), (5, 2), (3, 1), (2, 1), (1, 4)])
    }

    fn window_pair(p: &[(u64, u64)]) -> Option<GoodPair> {
        let d = seq(p).expand();
        find_good_pair(&d, 0, d.len(), 0)
    }

    #[test]
    fn good_pair_examples() {
        assert_eq!(window_pair(&[(2, 1), (1, 2), (0, 1)]), Some(GoodPair::ISOLATED));
        assert_eq!(window_pair(&[(16, 3), (12, 4), (9, 5), (5, 2), (3, 1), (2, 1), (1, 4)]), Some(GoodPair { p: 3, q: 5 }));
        assert_eq!(window_pair(&[(2, 5)]), None);
    }

    #[test]
    fn good_pair_respects_beta_and_window() {
        // Window (12^4, 9^5, 5^2, 3) shifted by beta = 3 is (9^4, 6^5, 2^2, 0).
        let d = borri().expand();
        assert_eq!(find_good_pair(&d, 3, 15, 3), Some(GoodPair::ISOLATED));
        // Window (12^4, 9^5, 5^2) shifted by 3 is (9^4, 6^5, 2^2): p = 4, q = 2.
        assert_eq!(find_good_pair(&d, 3, 14, 3), Some(GoodPair { p: 4, q: 2 }));
    }

    #[test]
    fn decomposes_borri_graph() {
        let result = decompose(&borri());
        assert_eq!(
            result.components(),
            &[
                split(&[(4, 3)], &[(2, 1), (1, 4)]),
                split(&[], &[(0, 1)]),
                split(&[(4, 4)], &[(2, 2)]),
                tail(&[(2, 5)]),
            ]
        );
        let pairs: Vec<_> = result.peels().iter().map(|s| (s.pair.p, s.pair.q, s.alpha, s.beta)).collect();
        assert_eq!(pairs, vec![(3, 5, 12, 0), (0, 1, 11, 3), (4, 2, 5, 3)]);
        let compact = decompose_compact(&result);
        assert_eq!(compact.components(), result.components());
        assert_eq!(recompose_sequence(&result), borri());
    }

    #[test]
    fn triangle_is_three_dominant_peels() {
        let result = decompose(&seq(&[(2, 3)]));
        assert_eq!(result.components(), &[split(&[(0, 1)], &[]), split(&[(0, 1)], &[]), tail(&[(0, 1)])]);
        let compact = decompose_compact(&result);
        assert_eq!(compact.components(), &[split(&[(2, 3)], &[])]);
    }

    #[test]
    fn cycle_is_indecomposable() {
        let result = decompose(&seq(&[(2, 5)]));
        assert_eq!(result.components(), &[tail(&[(2, 5)])]);
        assert!(result.peels().is_empty());
    }

    #[test]
    fn single_vertex() {
        let result = decompose(&seq(&[(0, 1)]));
        assert_eq!(result.components(), &[tail(&[(0, 1)])]);
        assert_eq!(decompose_compact(&result).components(), result.components());
    }

    #[test]
    fn compaction_of_threshold_chain() {
        let k = split(&[(0, 1)], &[]);
        let s = split(&[], &[(0, 1)]);
        let canonical = DecompositionResult::new(
            vec![k.clone(), k, s.clone(), s.clone(), s, tail(&[(0, 1)])],
            false,
        );
        let compact = decompose_compact(&canonical);
        assert_eq!(compact.components(), &[split(&[(1, 2)], &[]), split(&[], &[(0, 4)])]);
        assert!(compact.is_compact());
        assert_eq!(recompose_sequence(&compact), seq(&[(5, 2), (2, 4)]));
    }

    #[test]
    fn trivial_tail_next_to_nontrivial_stays_alone() {
        // P4 composed with a single vertex.
        let original = seq(&[(3, 2), (2, 1), (1, 2)]);
        let canonical = decompose(&original);
        assert_eq!(canonical.components(), &[split(&[(2, 2)], &[(1, 2)]), tail(&[(0, 1)])]);
        let compact = decompose_compact(&canonical);
        assert_eq!(compact.components(), canonical.components());
        assert_eq!(recompose_sequence(&compact), original);
    }

    #[test]
    fn recompose_examples() {
        let r = DecompositionResult::new(vec![split(&[(1, 2)], &[]), split(&[], &[(0, 4)])], true);
        assert_eq!(recompose_sequence(&r), seq(&[(5, 2), (2, 4)]));
        let r = DecompositionResult::new(vec![tail(&[(2, 5)])], false);
        assert_eq!(recompose_sequence(&r), seq(&[(2, 5)]));
    }
}
