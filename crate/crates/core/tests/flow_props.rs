mod common;

use flowroots::flow::{chromatic_poly, flow_count_oracle, flow_poly, FlowEngine};
use flowroots::graph::Multigraph;
use flowroots::planar::{planarity_embed, Planarity};
use flowroots::poly::IntPoly;
use num_bigint::BigInt;
use proptest::prelude::*;

/// Proper colourings with `k` colours by exhaustive assignment.
fn colourings(g: &Multigraph, k: u64) -> u64 {
    let n = g.n();
    let total = k.pow(n as u32);
    (0..total)
        .filter(|&code| {
            let colour = |v: usize| code / k.pow(v as u32) % k;
            g.edges().iter().all(|e| colour(e.u) != colour(e.v))
        })
        .count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn oracle_agrees(g in common::multigraph(7, 11, true)) {
        prop_assume!(g.nullity() <= 8);
        let f = flow_poly(&g);
        for k in 2..=5u32 {
            prop_assert_eq!(f.eval_i64(k as i64), flow_count_oracle(&g, k).unwrap());
        }
    }

    #[test]
    fn series_reduction_preserves_flow(g in common::bridgeless(8, 10)) {
        prop_assert_eq!(flow_poly(&g.series_reduce().unwrap()), flow_poly(&g));
    }

    #[test]
    fn decomposition_does_not_change_result(g in common::connected(9, 10, true)) {
        prop_assert_eq!(FlowEngine::new(true).flow_poly(&g), FlowEngine::new(false).flow_poly(&g));
    }

    #[test]
    fn degree_is_nullity(g in common::multigraph(8, 14, true)) {
        let f = flow_poly(&g);
        if g.has_bridge() {
            prop_assert!(f.is_zero());
        } else {
            prop_assert_eq!(f.degree(), Some(g.nullity()));
        }
    }

    #[test]
    fn chromatic_matches_brute_force(g in common::multigraph(6, 10, true)) {
        let p = chromatic_poly(&g);
        for k in 0..=4u64 {
            prop_assert_eq!(p.eval_i64(k as i64), BigInt::from(colourings(&g, k)));
        }
    }

    #[test]
    fn planar_duality(g in common::connected(8, 8, true)) {
        if let Planarity::Planar(e) = planarity_embed(&g) {
            let dual = e.dual().unwrap();
            prop_assert_eq!(chromatic_poly(&dual), &flow_poly(&g) * &IntPoly::x());
        }
    }

    #[test]
    fn shared_cache_matches_fresh_engine(gs in prop::collection::vec(common::bridgeless(6, 6), 1..6)) {
        let shared = FlowEngine::new(true);
        for g in &gs {
            prop_assert_eq!(shared.flow_poly(g), FlowEngine::new(true).flow_poly(g));
        }
    }
}
