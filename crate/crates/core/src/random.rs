//! Seeded random unigraphs and threshold graphs.
//!
//! All generators use `ChaCha8Rng::seed_from_u64(seed)`, so a seed produces
//! the same graph on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decompose::Component;
use crate::degseq::{DegreeSequence, RelativeTag};
use crate::dist::UnigraphKind;
use crate::family::{realize, small_kinds, Realization};
use crate::graph::{compose, Graph};

/// A random composed unigraph together with the pieces it was built from.
#[derive(Debug, Clone)]
pub struct RandomUnigraph {
    pub graph: Graph,
    /// Canonical components, leftmost first, as produced by the generator.
    pub components: Vec<Component>,
    /// Family and relative of every piece, in the same order.
    pub pieces: Vec<(UnigraphKind, RelativeTag)>,
}

fn pick_relative(rng: &mut impl Rng, split: bool) -> RelativeTag {
    if split {
        RelativeTag::ALL[rng.random_range(0..4)]
    } else if rng.random_bool(0.5) {
        RelativeTag::Complement
    } else {
        RelativeTag::Identity
    }
}

/// Composes up to `component_budget` random indecomposable unigraphs with at
/// most `size_budget` vertices in total.
///
/// The rightmost piece is any indecomposable family member (or a single
/// vertex); the others are split family members or single clique/stable
/// vertices. Every piece gets a random relative.
pub fn random_unigraph(seed: u64, component_budget: usize, size_budget: u64) -> RandomUnigraph {
    assert!(component_budget >= 1 && size_budget >= 1, "budgets must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let catalog = small_kinds(size_budget);
    let count = rng.random_range(1..=component_budget);

    let mut left = size_budget;
    let tail_options: Vec<&UnigraphKind> =
        catalog.iter().filter(|k| k.vertex_count() <= left.saturating_sub(count as u64 - 1).max(1)).collect();
    let tail_kind = if tail_options.is_empty() || rng.random_bool(0.15) {
        UnigraphKind::SingleVertex
    } else {
        tail_options[rng.random_range(0..tail_options.len())].clone()
    };
    let tail_rel = pick_relative(&mut rng, tail_kind.is_split());
    let tail_graph = realize(&tail_kind, tail_rel).expect("catalog kinds are valid").into_graph();
    left -= tail_graph.vertex_count() as u64;

    let mut pieces = vec![(tail_kind, tail_rel)];
    let mut components = vec![Component::Tail(tail_graph.degree_sequence())];
    let mut graph = tail_graph;
    for _ in 1..count {
        if left == 0 {
            break;
        }
        let options: Vec<&UnigraphKind> =
            catalog.iter().filter(|k| k.is_split() && k.vertex_count() <= left).collect();
        let kind = if options.is_empty() || rng.random_bool(0.4) {
            if rng.random_bool(0.5) {
                UnigraphKind::TrivialK
            } else {
                UnigraphKind::TrivialS
            }
        } else {
            options[rng.random_range(0..options.len())].clone()
        };
        let rel = if kind.vertex_count() == 1 { RelativeTag::Identity } else { pick_relative(&mut rng, true) };
        let Realization::Split(sg) = realize(&kind, rel).expect("catalog kinds are valid") else {
            unreachable!("split kinds realize as split graphs")
        };
        left -= sg.graph().vertex_count() as u64;
        components.push(Component::Split(sg.paired_degree_sequence()));
        pieces.push((kind, rel));
        graph = compose(&sg, &graph);
    }
    components.reverse();
    pieces.reverse();
    RandomUnigraph { graph, components, pieces }
}

/// Random choices shared by the graph and sequence threshold generators:
/// `true` means the vertex added at that step is dominating. Step 0 is the
/// starting vertex and is always `false`.
fn threshold_steps(seed: u64, n: usize) -> Vec<bool> {
    assert!(n >= 1, "threshold graph needs a vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = vec![false; n];
    for s in steps.iter_mut().skip(1) {
        *s = rng.random_bool(0.5);
    }
    steps
}

/// `n`-vertex threshold graph grown from `K_1` by adding isolated or
/// dominating vertices with equal probability.
pub fn random_threshold(seed: u64, n: usize) -> Graph {
    threshold_from_steps(&threshold_steps(seed, n))
}

/// Threshold graph from explicit steps: `steps[i]` says whether vertex `i`
/// dominates vertices `0..i`. `steps[0]` is ignored.
pub fn threshold_from_steps(steps: &[bool]) -> Graph {
    let mut g = Graph::empty(steps.len());
    for (v, &dominating) in steps.iter().enumerate().skip(1) {
        if dominating {
            for u in 0..v {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Degree sequence of `random_threshold(seed, n)`, computed without building
/// the graph.
pub fn random_threshold_sequence(seed: u64, n: usize) -> DegreeSequence {
    let steps = threshold_steps(seed, n);
    let mut degrees = vec![0u64; n];
    let mut later_dominating = 0u64;
    for v in (0..n).rev() {
        degrees[v] = later_dominating + if steps[v] { v as u64 } else { 0 };
        if steps[v] {
            later_dominating += 1;
        }
    }
    DegreeSequence::abbreviate(&degrees).expect("non-empty")
}
