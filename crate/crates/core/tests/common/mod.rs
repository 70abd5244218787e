#![allow(dead_code)]

use flowroots::graph::Multigraph;
use proptest::prelude::*;

/// Multigraphs on 1..=max_n vertices with up to max_m edges.
pub fn multigraph(max_n: usize, max_m: usize, loops: bool) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |pairs| {
            let pairs: Vec<_> = pairs
                .into_iter()
                .filter(|&(u, v)| loops || u != v)
                .collect();
            Multigraph::from_pairs(n, &pairs).unwrap()
        })
    })
}

/// Connected multigraphs: a random spanning tree plus extra edges.
pub fn connected(max_n: usize, extra: usize, loops: bool) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        (parents, prop::collection::vec((0..n, 0..n), 0..=extra)).prop_map(move |(parents, more)| {
            let mut pairs: Vec<(usize, usize)> = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            pairs.extend(more.into_iter().filter(|&(u, v)| loops || u != v));
            Multigraph::from_pairs(n, &pairs).unwrap()
        })
    })
}

/// Simple graphs on n vertices from an upper-triangle bitmask.
pub fn simple(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut pairs = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        pairs.push((u, v));
                    }
                    k += 1;
                }
            }
            Multigraph::from_pairs(n, &pairs).unwrap()
        })
    })
}

/// Bridgeless connected multigraphs, by filtering.
pub fn bridgeless(max_n: usize, extra: usize) -> impl Strategy<Value = Multigraph> {
    connected(max_n, extra, true).prop_filter("has a bridge", |g| !g.has_bridge())
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
