use unigraph::decompose::{decompose, find_good_pair, recompose_sequence};
use unigraph::dist::find_dist_unigraph;
use unigraph::oracle::{brute_good_pairs, graphical_sequences, realizations, Oracle};
use unigraph::random::{random_threshold, random_unigraph};
use unigraph::{threshold_dist, Error};

#[test]
fn recognition_matches_brute_force_on_all_small_sequences() {
    let oracle = Oracle::default();
    let mut unigraphs = 0;
    let mut others = 0;
    for n in 1..=8 {
        for seq in graphical_sequences(n) {
            let reps = oracle.non_isomorphic_realizations(&seq, 2).unwrap();
            let fast = find_dist_unigraph(&seq);
            if reps.len() == 1 {
                unigraphs += 1;
                let report = fast.unwrap_or_else(|e| panic!("{seq}: expected unigraph, got {e}"));
                let brute = oracle.brute_dist_number(&reps[0]).unwrap();
                assert_eq!(report.dist, brute, "{seq}");
            } else {
                others += 1;
                assert_eq!(fast.err(), Some(Error::NotUnigraph), "{seq} has two realizations");
            }
        }
    }
    assert!(unigraphs > 100 && others > 100, "{unigraphs} unigraphs, {others} others");
}

#[test]
fn random_unigraphs_match_oracle() {
    let oracle = Oracle::default();
    for seed in 0..150 {
        let r = random_unigraph(seed, 3, 9);
        let seq = r.graph.degree_sequence();
        let report = find_dist_unigraph(&seq).unwrap_or_else(|e| panic!("seed {seed} {seq}: {e}"));
        assert_eq!(report.dist, oracle.brute_dist_number(&r.graph).unwrap(), "seed {seed} {seq}");
        let canonical = decompose(&seq);
        assert_eq!(canonical.components(), &r.components[..], "seed {seed} {seq}");
        assert_eq!(recompose_sequence(&canonical), seq);
    }
}

#[test]
fn random_threshold_graphs_match_oracle() {
    let oracle = Oracle::default();
    for seed in 0..150 {
        let g = random_threshold(seed, 1 + (seed as usize % 9));
        let seq = g.degree_sequence();
        let brute = oracle.brute_dist_number(&g).unwrap();
        assert_eq!(threshold_dist(&seq).unwrap(), brute, "seed {seed} {seq}");
        assert_eq!(find_dist_unigraph(&seq).unwrap().dist, brute, "seed {seed} {seq}");
    }
}

#[test]
fn good_pair_is_least_brute_pair() {
    for n in 2..=8 {
        for seq in graphical_sequences(n) {
            let master = seq.expand();
            let fast = find_good_pair(&master, 0, master.len(), 0);
            assert_eq!(fast, brute_good_pairs(&seq).into_iter().min(), "{seq}");
        }
    }
}

#[test]
fn realizations_have_the_requested_degrees() {
    for seq in graphical_sequences(5) {
        for g in realizations(&seq) {
            assert_eq!(g.degree_sequence(), seq);
        }
    }
}

#[test]
fn graphical_test_matches_enumeration() {
    use unigraph::DegreeSequence;
    for n in 1..=7u64 {
        let graphical = graphical_sequences(n as usize);
        // Every non-increasing sequence with entries below n.
        let mut all = vec![vec![]];
        for _ in 0..n {
            all = all
                .into_iter()
                .flat_map(|v: Vec<u64>| {
                    let top = v.last().copied().unwrap_or(n - 1);
                    (0..=top).map(move |d| {
                        let mut w = v.clone();
                        w.push(d);
                        w
                    })
                })
                .collect();
        }
        for v in all {
            let seq = DegreeSequence::abbreviate(&v).unwrap();
            assert_eq!(seq.is_graphical(), graphical.contains(&seq), "{seq}");
        }
    }
}
