//! Property tests for the exact arithmetic layer.

use coxgale_core::algebra::rational::RatExt;
use coxgale_core::algebra::real::{recognize_cos_pi, solve_quadratic};
use coxgale_core::algebra::{AlgebraicReal, Rat};
use proptest::prelude::*;

/// Small algebraic numbers of the shape (a + b sqrt(r)) / c.
fn small_alg() -> impl Strategy<Value = AlgebraicReal> {
    (-6i64..=6, -4i64..=4, prop_oneof![Just(2i64), Just(3), Just(5)], 1i64..=4).prop_map(
        |(a, b, r, c)| {
            let root = AlgebraicReal::from_int(r).sqrt_nonneg().unwrap();
            AlgebraicReal::from_int(a)
                .add(&root.mul_rational(&Rat::from_int(b)))
                .mul_rational(&Rat::from_pair(1, c))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn addition_associates(a in small_alg(), b in small_alg(), c in small_alg()) {
        let lhs = a.add(&b).add(&c);
        let rhs = a.add(&b.add(&c));
        prop_assert!(lhs.equals(&rhs));
    }

    #[test]
    fn multiplication_distributes(a in small_alg(), b in small_alg(), c in small_alg()) {
        let lhs = a.mul(&b.add(&c));
        let rhs = a.mul(&b).add(&a.mul(&c));
        prop_assert!(lhs.equals(&rhs));
    }

    #[test]
    fn sqrt_squares_back(a in small_alg()) {
        if a.sign() >= 0 {
            let s = a.sqrt_nonneg().unwrap();
            prop_assert!(s.square().equals(&a));
        }
    }

    #[test]
    fn quadratic_roots_vanish(
        coeffs in (prop_oneof![Just(2i64), Just(3), Just(5)],
                   -4i64..=4, -4i64..=4, -4i64..=4, -3i64..=3)
    ) {
        // rational a, b with an irrational constant term keeps the
        // resultant degrees small while still hitting irrational roots
        let (r, a0, b0, c0, c1) = coeffs;
        let root = AlgebraicReal::from_int(r).sqrt_nonneg().unwrap();
        let a = AlgebraicReal::from_int(a0);
        let b = AlgebraicReal::from_int(b0);
        let c = AlgebraicReal::from_int(c0).add(&root.mul_rational(&Rat::from_int(c1)));
        if a.sign() != 0 || b.sign() != 0 || c.sign() != 0 {
            for root in solve_quadratic(&a, &b, &c).unwrap() {
                let v = a.mul(&root.square()).add(&b.mul(&root)).add(&c);
                prop_assert_eq!(v.sign(), 0);
            }
        }
    }

    #[test]
    fn sign_matches_ordering(a in small_alg(), b in small_alg()) {
        let s = a.sub(&b).sign();
        let ord = a.compare(&b);
        prop_assert_eq!(s, match ord {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        });
    }
}

#[test]
fn cos_recognition_round_trip_up_to_200() {
    for m in 2..=200u64 {
        let c = AlgebraicReal::cos_pi_over(m).unwrap();
        assert_eq!(recognize_cos_pi(&c, 200), Some(m), "m = {}", m);
    }
}
