mod common;

use std::collections::BTreeSet;

use flowroots::enumerate::three_edge_connected;
use flowroots::graph::{named, Multigraph};
use flowroots::matroid::Matroid;
use flowroots::poly::integer_roots;
use proptest::prelude::*;

fn matroid() -> impl Strategy<Value = Matroid> {
    prop_oneof![
        common::multigraph(6, 10, true).prop_map(|g| Matroid::cycle(&g).unwrap()),
        common::multigraph(6, 10, true).prop_map(|g| Matroid::cocycle(&g).unwrap()),
        (0usize..=6, 0usize..=8).prop_map(|(r, n)| Matroid::uniform(r.min(n), n).unwrap()),
    ]
}

/// Simple cocycle matroids of bridgeless multigraphs, at most `max` elements.
fn simple_cographic(max: usize) -> impl Strategy<Value = Matroid> {
    common::bridgeless(6, 8)
        .prop_map(|g| Matroid::cocycle(&g).unwrap().simplify())
        .prop_filter("too large", move |m| m.size() <= max)
}

fn submasks(m: &Matroid) -> impl Strategy<Value = u64> {
    let ground = m.ground();
    any::<u64>().prop_map(move |x| x & ground)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_axioms((m, a, b) in matroid().prop_flat_map(|m| {
        let (a, b) = (submasks(&m), submasks(&m));
        (Just(m), a, b)
    })) {
        let r = |x: u64| m.rank_of(x);
        prop_assert!(r(a) <= a.count_ones() as usize);
        prop_assert!(r(a & b) <= r(a));
        prop_assert!(r(a) <= r(a | b));
        prop_assert!(r(a) + r(b) >= r(a | b) + r(a & b));
        prop_assert!(m.is_flat(m.closure(a)));
        prop_assert_eq!(r(m.closure(a)), r(a));
    }

    #[test]
    fn mobius_sums_vanish(m in matroid()) {
        let lat = m.flats().unwrap();
        prop_assert_eq!(lat.mobius[0], 1);
        for (j, &y) in lat.flats.iter().enumerate().skip(1) {
            let sum: i64 = lat
                .flats
                .iter()
                .zip(&lat.mobius)
                .filter(|(&x, _)| x & !y == 0)
                .map(|(_, &mu)| mu)
                .sum();
            prop_assert_eq!(sum, 0, "flat {} of {}", j, lat.flats.len());
        }
    }

    #[test]
    fn points_are_parallel_classes(g in common::multigraph(6, 10, true)) {
        let m = Matroid::cycle(&g).unwrap();
        let classes: BTreeSet<(usize, usize)> = g
            .edges()
            .iter()
            .filter(|e| !e.is_loop())
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        prop_assert_eq!(m.flats().unwrap().count_of_rank(1), classes.len());
    }

    #[test]
    fn modularity_criteria_agree(m in simple_cographic(12)) {
        let r = m.rank();
        let lattice = m.flats().unwrap();
        for &x in &lattice.flats {
            let by_rank = m.is_modular_in(&lattice, x);
            let lines = m.satisfies_line_criterion(x).unwrap();
            let fast = lines && (m.rank_of(x) + 1 >= r || by_rank);
            prop_assert_eq!(fast, by_rank);
            if m.rank_of(x) + 1 >= r {
                prop_assert_eq!(lines, by_rank);
            } else {
                prop_assert!(lines || !by_rank);
            }
        }
    }

    #[test]
    fn modular_flats_divide(m in simple_cographic(12)) {
        let chi = m.char_poly_mobius().unwrap();
        let lattice = m.flats().unwrap();
        for &x in &lattice.flats {
            if m.is_modular_in(&lattice, x) {
                let part = m.restrict(x).char_poly_mobius().unwrap();
                prop_assert!(chi.divide_exact(&part).is_ok());
            }
        }
    }

    #[test]
    fn chain_gives_the_roots(m in simple_cographic(14)) {
        let rep = m.supersolvable().unwrap();
        if rep.supersolvable {
            let chain = rep.chain.unwrap();
            let mut steps: Vec<usize> = chain.windows(2).map(|w| w[1].len() - w[0].len()).collect();
            steps.sort();
            let mut forced = rep.forced_roots.unwrap();
            forced.sort();
            prop_assert_eq!(&steps, &forced);
            let chi = m.char_poly_mobius().unwrap();
            let roots = integer_roots(&chi).unwrap();
            prop_assert!(roots.all_roots_integral);
            let mut got: Vec<usize> = roots
                .roots_with_multiplicity()
                .iter()
                .map(|r| usize::try_from(r).unwrap())
                .collect();
            got.sort();
            prop_assert_eq!(got, steps);
        }
    }
}

fn three_circuits(m: &Matroid) -> BTreeSet<Vec<usize>> {
    let elems: Vec<u64> = (0..64).map(|i| 1u64 << i).filter(|b| m.ground() & b != 0).collect();
    let mut out = BTreeSet::new();
    for a in 0..elems.len() {
        for b in a + 1..elems.len() {
            for c in b + 1..elems.len() {
                let t = elems[a] | elems[b] | elems[c];
                let independent_pairs = [elems[a] | elems[b], elems[a] | elems[c], elems[b] | elems[c]]
                    .iter()
                    .all(|&p| m.rank_of(p) == 2);
                if m.rank_of(t) == 2 && independent_pairs {
                    out.insert(m.labels_of(t));
                }
            }
        }
    }
    out
}

#[test]
fn three_circuits_are_minimal_three_cutsets() {
    let mut graphs: Vec<Multigraph> = (4..=7).flat_map(three_edge_connected).collect();
    graphs.push(named::figure_one());
    graphs.push(named::petersen());
    for g in graphs {
        let cuts: BTreeSet<Vec<usize>> = g
            .minimal_three_cutsets()
            .unwrap()
            .cutsets
            .iter()
            .map(|c| {
                let mut e = c.edges.to_vec();
                e.sort();
                e
            })
            .collect();
        assert_eq!(three_circuits(&Matroid::cocycle(&g).unwrap()), cuts);
    }
}

#[test]
fn line_criterion_is_weaker_below_copoints() {
    let u = Matroid::uniform(4, 5).unwrap();
    assert!(u.satisfies_line_criterion(0b11).unwrap());
    assert!(!u.is_modular_by_rank(0b11).unwrap());
    assert!(!u.is_modular_flat(0b11).unwrap());
}

#[test]
fn chordal_cycle_matroids_are_supersolvable() {
    for g in [named::complete(4), named::complete(5), named::wheel(3), named::cycle(3)] {
        assert!(Matroid::cycle(&g).unwrap().supersolvable().unwrap().supersolvable);
    }
    assert!(!Matroid::cycle(&named::cycle(4)).unwrap().supersolvable().unwrap().supersolvable);
}
