use proptest::prelude::*;

use unigraph::decompose::{decompose, decompose_compact, find_good_pair, recompose_sequence, Component};
use unigraph::degseq::{DegreeSequence, RelativeTag};
use unigraph::dist::{find_dist_unigraph, star_search};
use unigraph::family::{realize, small_kinds};
use unigraph::graph::{compose, Graph, SplitGraph};
use unigraph::oracle::brute_good_pairs;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// A random split graph: clique `0..a`, stable set `a..n`, random cross edges.
fn split_strategy(max_n: usize) -> impl Strategy<Value = SplitGraph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, a)| (Just(n), Just(a), proptest::collection::vec(any::<bool>(), a * (n - a))))
        .prop_map(|(n, a, bits)| {
            let mut g = Graph::empty(n);
            for u in 0..a {
                for v in u + 1..a {
                    g.add_edge(u, v);
                }
            }
            for (i, &b) in bits.iter().enumerate() {
                if b {
                    g.add_edge(i / (n - a), a + i % (n - a));
                }
            }
            SplitGraph::new(g, (0..a).collect(), (a..n).collect()).unwrap()
        })
}

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn decomposition_recomposes(g in graph_strategy(30)) {
        let seq = g.degree_sequence();
        let canonical = decompose(&seq);
        prop_assert_eq!(recompose_sequence(&canonical), seq.clone());
        let compact = decompose_compact(&canonical);
        prop_assert_eq!(recompose_sequence(&compact), seq);
        let again = decompose_compact(&compact);
        prop_assert_eq!(again.components(), compact.components());
    }

    #[test]
    fn split_components_are_indecomposable(g in graph_strategy(20)) {
        for c in decompose(&g.degree_sequence()).components() {
            let flat = match c {
                Component::Split(p) => p.flatten(),
                Component::Tail(s) => s.clone(),
            };
            if flat.vertex_count() > 1 {
                let master = flat.expand();
                prop_assert_eq!(find_good_pair(&master, 0, master.len(), 0), None, "{}", c);
            }
        }
    }

    #[test]
    fn good_pair_is_lexicographic_minimum(g in graph_strategy(14)) {
        let seq = g.degree_sequence();
        prop_assume!(seq.vertex_count() >= 2);
        let master = seq.expand();
        let fast = find_good_pair(&master, 0, master.len(), 0);
        prop_assert_eq!(fast, brute_good_pairs(&seq).into_iter().min());
    }

    #[test]
    fn complement_sequences_agree(g in graph_strategy(25)) {
        prop_assert_eq!(g.complement().degree_sequence(), g.degree_sequence().complement());
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn relatives_agree_with_graphs(sg in split_strategy(14)) {
        let paired = sg.paired_degree_sequence();
        prop_assert_eq!(sg.complement().paired_degree_sequence(), paired.complement());
        prop_assert_eq!(sg.inverse().paired_degree_sequence(), paired.inverse());
        prop_assert_eq!(sg.inverse().inverse(), sg.clone());
        prop_assert_eq!(paired.complement().complement(), paired.clone());
        prop_assert_eq!(paired.inverse().inverse(), paired.clone());
        prop_assert_eq!(paired.inverse().complement(), paired.complement().inverse());
        prop_assert_eq!(paired.flatten(), sg.graph().degree_sequence());
    }

    #[test]
    fn composition_adds_clique_size(sg in split_strategy(8), h in graph_strategy(8)) {
        let g = compose(&sg, &h);
        let a = sg.clique().len();
        for v in 0..sg.graph().vertex_count() {
            let extra = if sg.clique().contains(&v) { h.vertex_count() } else { 0 };
            prop_assert_eq!(g.degree(v), sg.graph().degree(v) + extra);
        }
        for v in 0..h.vertex_count() {
            prop_assert_eq!(g.degree(v + sg.graph().vertex_count()), h.degree(v) + a);
        }
    }

    #[test]
    fn star_search_matches_binomials(p in 1u64..=30, q in 1u64..=100_000) {
        let s = star_search(p, q).unwrap();
        let c = u128::from(s.colors);
        prop_assert_eq!(s.value, c * binom(c, u128::from(p)));
        prop_assert!(s.value >= u128::from(q));
        let below = c - 1;
        prop_assert!(below < u128::from(p) || below * binom(below, u128::from(p)) < u128::from(q));
    }

    #[test]
    fn abbreviation_roundtrips(degrees in proptest::collection::vec(0u64..20, 20..40)) {
        let seq = DegreeSequence::abbreviate(&degrees).unwrap();
        let mut sorted = degrees.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(seq.expand(), sorted);
    }
}


#[test]
fn family_members_are_recognized() {
    for kind in small_kinds(16) {
        let tags: &[RelativeTag] = if kind.is_split() { &RelativeTag::ALL } else { &RelativeTag::ALL[..2] };
        for &tag in tags {
            let r = realize(&kind, tag).unwrap();
            let report = find_dist_unigraph(&r.graph().degree_sequence()).unwrap();
            assert_eq!(report.components.len(), 1, "{kind} {tag}");
            let c = &report.components[0];
            assert_eq!(c.kind, kind);
            assert_eq!(report.dist, kind.dist_number());
            let back = realize(&c.kind, c.relative).unwrap();
            assert_eq!(back.graph().degree_sequence(), r.graph().degree_sequence(), "{kind} {tag}");
        }
    }
}
