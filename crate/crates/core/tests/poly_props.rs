use flowroots::poly::{all_roots_real, check_coefficient_bound, integer_roots, BoundMode, IntPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn lin(r: i64) -> IntPoly {
    IntPoly::from_i64(&[-r, 1])
}

fn from_roots(roots: &[i64]) -> IntPoly {
    roots.iter().fold(IntPoly::one(), |acc, &r| &acc * &lin(r))
}

/// Quadratic `x^2 - b x + c`, with real roots iff `b^2 >= 4c`.
fn quadratic(b: i64, c: i64) -> IntPoly {
    IntPoly::from_i64(&[c, -b, 1])
}

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..7).prop_map(|c| IntPoly::from_i64(&c))
}

proptest! {
    #[test]
    fn integer_roots_recovered(mut roots in prop::collection::vec(-50i64..=50, 0..=12)) {
        let p = from_roots(&roots);
        let rep = integer_roots(&p).unwrap();
        let mut got: Vec<i64> = rep
            .roots_with_multiplicity()
            .iter()
            .map(|r| i64::try_from(r).unwrap())
            .collect();
        roots.sort();
        got.sort();
        prop_assert_eq!(got, roots);
        prop_assert!(rep.all_roots_integral && rep.all_roots_real);
        prop_assert_eq!(rep.nonintegral_part.degree(), Some(0));
    }

    #[test]
    fn root_report_reassembles(roots in prop::collection::vec(-9i64..=9, 0..5), quads in prop::collection::vec((-8i64..=8, 1i64..=20), 0..3)) {
        let mut p = from_roots(&roots);
        for &(b, c) in &quads {
            p = &p * &quadratic(b, c);
        }
        let rep = integer_roots(&p).unwrap();
        let rebuilt = rep
            .integer_roots
            .iter()
            .fold(rep.nonintegral_part.clone(), |acc, (r, k)| &acc * &IntPoly::linear(r).pow(*k));
        prop_assert_eq!(rebuilt, p);
        if rep.all_roots_integral {
            prop_assert!(rep.all_roots_real);
            prop_assert_eq!(rep.nonintegral_part.degree(), Some(0));
        }
    }

    #[test]
    fn divide_exact_inverts_multiplication(p in small_poly(), mut q in small_poly()) {
        let d = q.degree().unwrap_or(0);
        let mut c = q.coeffs().to_vec();
        c.resize(d + 1, BigInt::from(0));
        c[d] = BigInt::from(1);
        q = IntPoly::from_coeffs(c);
        prop_assert_eq!((&p * &q).divide_exact(&q).unwrap(), p);
    }

    #[test]
    fn trailing_coefficient_nonzero(p in small_poly(), q in small_poly()) {
        for r in [&p * &q, &p + &q, &p - &q] {
            prop_assert!(r.is_zero() || r.coeffs().last().is_some_and(|c| *c != BigInt::from(0)));
        }
    }

    #[test]
    fn real_roots_match_construction(
        roots in prop::collection::vec(-9i64..=9, 0..4),
        quads in prop::collection::vec((-12i64..=12, -10i64..=40), 0..4),
    ) {
        let mut p = from_roots(&roots);
        let mut real = true;
        for &(b, c) in &quads {
            real &= b * b >= 4 * c;
            p = &p * &quadratic(b, c);
        }
        prop_assert_eq!(all_roots_real(&p), real);
    }

    #[test]
    fn real_case_bound(roots in prop::collection::vec(1i64..=12, 1..=8), quads in prop::collection::vec((3i64..=16, 1i64..=60), 0..3)) {
        let mut p = from_roots(&roots);
        let mut all_equal = roots.iter().all(|&r| r == roots[0]);
        for &(b, c) in &quads {
            prop_assume!(b * b > 4 * c);
            p = &p * &quadratic(b, c);
            all_equal = false;
        }
        let rep = check_coefficient_bound(&p, BoundMode::RealCase).unwrap();
        prop_assert!(rep.bounds_hold());
        prop_assert!(rep.entries.iter().all(|e| e.equality == all_equal));
    }

    #[test]
    fn integer_case_bound(roots in prop::collection::vec(1i64..=10, 2..=9)) {
        prop_assume!(roots.iter().sum::<i64>() % roots.len() as i64 != 0);
        let p = from_roots(&roots);
        let rep = check_coefficient_bound(&p, BoundMode::IntegerCase).unwrap();
        prop_assert!(rep.bounds_hold());
        let spread = roots.iter().max().unwrap() - roots.iter().min().unwrap();
        prop_assert_eq!(rep.entries[0].equality, spread == 1);
        prop_assert_eq!(rep.is_extremal_form, spread == 1);
    }
}
