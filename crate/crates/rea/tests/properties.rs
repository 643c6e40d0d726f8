//! Property tests: field axioms of the scalar type on randomly generated
//! canonical values, canonical-form idempotence, printer/parser round-trip,
//! embedding multiplicativity, and the rank/specialization comparison.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rea::scalar::{LaurentPoly, LaurentRational};
use rea::tensor::{rank_exact, rank_rational, specialize_matrix, QMatrix};

fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-9i64..=9, -6i64..=6), 0..5).prop_map(|terms| {
        let mut acc = LaurentPoly::zero();
        for (c, e) in terms {
            acc = acc.add(&LaurentPoly::monomial(BigInt::from(c), e));
        }
        acc
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

fn scalar_strategy() -> impl Strategy<Value = LaurentRational> {
    (poly_strategy(), nonzero_poly()).prop_map(|(n, d)| LaurentRational::new(n, d))
}

fn nonzero_scalar() -> impl Strategy<Value = LaurentRational> {
    scalar_strategy().prop_filter("nonzero", |s| !s.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_associative(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_associative(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributive(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn inverse_round_trip(a in nonzero_scalar()) {
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    #[test]
    fn subtraction_is_additive_inverse(a in scalar_strategy(), b in scalar_strategy()) {
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn canonicalization_idempotent(a in scalar_strategy()) {
        // rebuilding from the canonical numerator and denominator is a fixpoint
        let again = LaurentRational::new(a.num().clone(), a.den().clone());
        prop_assert_eq!(again, a);
    }

    #[test]
    fn print_parse_round_trip(a in scalar_strategy()) {
        let s = a.to_string();
        prop_assert_eq!(LaurentRational::parse(&s).unwrap(), a);
    }

    #[test]
    fn cross_multiplication_equality(n1 in poly_strategy(), d1 in nonzero_poly(), c in nonzero_poly()) {
        // a/b equals (ac)/(bc) after canonicalization
        let plain = LaurentRational::new(n1.clone(), d1.clone());
        let inflated = LaurentRational::new(n1.mul(&c), d1.mul(&c));
        prop_assert_eq!(plain, inflated);
    }

    #[test]
    fn embed_homomorphism(terms in prop::collection::vec((-5i64..=5, -3i64..=3), 4)) {
        // embed(M N) = embed(M) embed(N) at the same position, for 2x2 M, N
        let m = QMatrix::from_fn(vec![2], vec![2], |i, j| {
            let (c, e) = terms[i * 2 + j];
            LaurentRational::monomial(c, e)
        });
        let n = QMatrix::from_fn(vec![2], vec![2], |i, j| {
            let (c, e) = terms[(i * 2 + j + 1) % 4];
            LaurentRational::monomial(c, e)
        });
        let lhs = m.mul(&n).embed_at(2, 3, 2).unwrap();
        let rhs = m.embed_at(2, 3, 2).unwrap().mul(&n.embed_at(2, 3, 2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_dominates_specialization(entries in prop::collection::vec((-4i64..=4, -2i64..=2), 9)) {
        // specializing can only drop rank; equality must hold at full rank
        let m = QMatrix::from_fn(vec![3], vec![3], |i, j| {
            let (c, e) = entries[i * 3 + j];
            LaurentRational::monomial(c, e)
        });
        let sym = rank_exact(&m);
        let two = BigRational::from(BigInt::from(2));
        let spec = rank_rational(&specialize_matrix(&m, &two).unwrap());
        prop_assert!(sym >= spec);
        if spec == 3 {
            // full rank at the sample point forces full symbolic rank
            prop_assert_eq!(sym, 3);
        }
    }
}
