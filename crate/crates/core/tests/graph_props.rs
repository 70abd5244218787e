mod common;

use std::collections::BTreeSet;

use flowroots::enumerate::three_edge_connected;
use flowroots::flow::flow_stats;
use flowroots::graph::{format, named, Multigraph};
use proptest::prelude::*;

fn disconnects(g: &Multigraph, ids: &[usize]) -> bool {
    let set: BTreeSet<usize> = ids.iter().copied().collect();
    g.delete_edges(&set).component_count() > g.component_count()
}

proptest! {
    #[test]
    fn graph6_round_trip(g in common::simple(20)) {
        let text = format::to_graph6(&g).unwrap();
        let back = format::parse_graph6(text.as_bytes()).unwrap();
        prop_assert_eq!(back.simple_pairs(), g.simple_pairs());
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(format::detect(text.as_bytes()), format::Format::Graph6);
    }

    #[test]
    fn sparse6_round_trip(g in common::multigraph(12, 20, true)) {
        let text = format::to_sparse6(&g);
        let back = format::parse_sparse6(text.as_bytes()).unwrap();
        prop_assert_eq!(back.multiplicity_matrix(), g.multiplicity_matrix());
        prop_assert_eq!(format::detect(text.as_bytes()), format::Format::Sparse6);
    }

    #[test]
    fn edge_list_round_trip(g in common::multigraph(12, 20, true)) {
        let text = format::to_edge_list(&g);
        let back = format::parse(text.as_bytes(), None).unwrap();
        prop_assert_eq!(back.multiplicity_matrix(), g.multiplicity_matrix());
    }

    #[test]
    fn canonical_key_ignores_labels(
        (g, perm) in common::multigraph(8, 14, true).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), common::permutation(n))
        })
    ) {
        let h = g.relabel(&perm);
        prop_assert_eq!(h.canonical_key(), g.canonical_key());
    }

    #[test]
    fn handshake(g in common::multigraph(10, 20, true)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
    }

    #[test]
    fn series_reduce_reaches_three_edge_connectivity(g in common::bridgeless(8, 10)) {
        let r = g.series_reduce().unwrap();
        prop_assert!(r.n() <= 1 || r.edge_connectivity().unwrap() >= 3);
    }

    #[test]
    fn reported_cutsets_are_minimal(g in common::bridgeless(7, 10)) {
        let r = g.series_reduce().unwrap();
        prop_assume!(r.n() > 1);
        for c in r.minimal_three_cutsets().unwrap().cutsets {
            prop_assert!(disconnects(&r, &c.edges));
            for skip in 0..3 {
                let pair: Vec<usize> = (0..3).filter(|&i| i != skip).map(|i| c.edges[i]).collect();
                prop_assert!(!disconnects(&r, &pair));
            }
        }
    }
}

#[test]
fn relabeled_corpus_keys_agree() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for g in three_edge_connected(6) {
        let key = g.canonical_key();
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rng);
            assert_eq!(g.relabel(&perm).canonical_key(), key);
        }
    }
}

#[test]
fn non_isomorphic_keys_differ() {
    assert_ne!(named::complete(4).canonical_key(), named::cycle(4).canonical_key());
    assert_ne!(named::theta(3).canonical_key(), named::cycle(3).canonical_key());
}

#[test]
fn vertex_and_edge_counts_follow_rank_and_delta() {
    for n in 4..=7 {
        for g in three_edge_connected(n) {
            let s = flow_stats(&g);
            let (r, d) = (s.r as i64, s.delta as i64);
            assert_eq!(g.n() as i64, 2 * r - 2 - d);
            assert_eq!(g.m() as i64, 3 * r - 3 - d);
        }
    }
}

#[test]
fn every_three_cut_is_listed() {
    for g in three_edge_connected(6) {
        let listed: BTreeSet<[usize; 3]> = g
            .minimal_three_cutsets()
            .unwrap()
            .cutsets
            .iter()
            .map(|c| {
                let mut e = c.edges;
                e.sort();
                e
            })
            .collect();
        let ids = g.edge_ids();
        let mut brute = BTreeSet::new();
        for a in 0..ids.len() {
            for b in a + 1..ids.len() {
                for c in b + 1..ids.len() {
                    if disconnects(&g, &[ids[a], ids[b], ids[c]]) {
                        brute.insert([ids[a], ids[b], ids[c]]);
                    }
                }
            }
        }
        assert_eq!(listed, brute);
    }
}

#[test]
fn spec_format_examples() {
    let k4 = format::parse_graph6(b"C~").unwrap();
    assert!(k4.is_isomorphic(&named::complete(4)));
    let triple = format::parse(b"2 3\n0 1\n0 1\n0 1\n", None).unwrap();
    assert_eq!(triple.n(), 2);
    assert_eq!(triple.multiplicity_matrix()[1], 3);
    assert!(format::parse_graph6(b"B").is_err());
}
