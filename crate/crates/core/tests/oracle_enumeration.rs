mod common;

use common::*;
use extremal_count::oracle::{
    enumerate_triangle_free, find_maximizers, lemma1_check, SearchConfig,
};
use extremal_count::Graph;
use num_bigint::BigUint;

#[test]
fn class_counts_match_brute_force() {
    for n in 1..=6 {
        assert_eq!(
            enumerate_triangle_free(n, false).unwrap().len(),
            brute_triangle_free_classes(n),
            "n = {n}"
        );
    }
}

#[test]
fn orbit_stabiliser_at_seven() {
    // sum over classes of n!/|Aut| equals the number of labelled graphs
    let n = 7;
    let graphs = enumerate_triangle_free(n, false).unwrap();
    let labelled: BigUint = graphs
        .iter()
        .map(|g| factorial(n as u64) / BigUint::from(brute_automorphisms(g)))
        .sum();
    assert_eq!(labelled, BigUint::from(labelled_triangle_free(n)));
}

#[test]
fn enumerated_graphs_are_distinct_and_triangle_free() {
    for n in [7, 8] {
        let graphs = enumerate_triangle_free(n, false).unwrap();
        let mut codes: Vec<u64> = graphs.iter().map(|g| g.canonical_code().unwrap()).collect();
        assert!(graphs.iter().all(|g| g.is_triangle_free() && g.n() == n));
        let len = codes.len();
        codes.dedup();
        assert_eq!(codes.len(), len);
        for a in 0..=n {
            let k = Graph::complete_bipartite(a, n - a);
            assert!(graphs.iter().any(|g| g.is_isomorphic(&k).unwrap()));
        }
    }
}

#[test]
fn maximizers_satisfy_lemma1_and_theorem1_patterns_are_complete_bipartite() {
    // soft expectation logged as data: small n is outside the asymptotic regime
    for pattern in [
        Graph::complete(2),
        Graph::path(3),
        Graph::path(4),
        Graph::cycle(4),
    ] {
        for n in pattern.n() + 1..=7 {
            let r = find_maximizers(&pattern, n, &SearchConfig::default()).unwrap();
            for w in &r.witnesses {
                assert!(lemma1_check(&pattern, w).holds());
                assert_eq!(
                    extremal_count::embeddings::count_copies(&pattern, w),
                    r.max_count
                );
            }
            if !r.all_complete_bipartite {
                eprintln!(
                    "pattern {} at n = {n}: non-complete-bipartite maximiser",
                    r.pattern_id
                );
            }
        }
    }
}
