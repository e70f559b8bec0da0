//! Field and homomorphism laws for Laurent polynomials and rational
//! functions over small random inputs.

use cnqkz::ring::{int, rat, Assignment, ExponentVector, Gen, LaurentPoly, RatFunc, Substitution};
use num_complex::Complex64;
use proptest::prelude::*;

// rank 2: generators v, u, y1, y2, x
const RANK: usize = 2;
const NVARS: usize = RANK + 3;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    let term = (prop::collection::vec(-2i32..=2, NVARS), -4i64..=4, 1i64..=3);
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        LaurentPoly::from_terms(
            NVARS,
            terms
                .into_iter()
                .map(|(e, n, d)| (ExponentVector::from_slice(&e), rat(n, d))),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn frac() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly()).prop_map(|(a, b)| RatFunc::new(a, b).unwrap())
}

fn swap_y() -> Substitution {
    let e = |g: Gen| {
        let mut v = ExponentVector::zero(NVARS);
        v.set(g.index(RANK), 1);
        v
    };
    Substitution::identity(RANK)
        .with(Gen::Y(1), int(1), e(Gen::Y(2)))
        .with(Gen::Y(2), int(1), e(Gen::Y(1)))
}

fn sample_point() -> Assignment {
    let y = [Complex64::new(0.7, 0.3), Complex64::new(1.3, -0.2)];
    Assignment::new(0.37, 0.61, &y, Complex64::new(0.45, 0.8))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_undoes_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn fraction_field_laws(f in frac(), g in frac(), h in frac()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        if !g.is_zero() {
            prop_assert_eq!(&(&f * &g) / &g, f.clone());
            prop_assert!((&g * &g.inv().unwrap()).frac_equal(&RatFunc::one(NVARS)));
        }
    }

    #[test]
    fn substitution_is_a_homomorphism(f in frac(), g in frac()) {
        let s = swap_y();
        let lhs = (&f * &g).substitute(&s).unwrap();
        let rhs = &f.substitute(&s).unwrap() * &g.substitute(&s).unwrap();
        prop_assert_eq!(lhs, rhs);
        // swapping twice is the identity
        prop_assert_eq!(f.substitute(&s).unwrap().substitute(&s).unwrap(), f);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly()) {
        let at = sample_point();
        let lhs = (&a * &b).eval(&at);
        let rhs = a.eval(&at) * b.eval(&at);
        let scale = 1.0 + (&a * &b).eval_abs_scale(&at);
        prop_assert!((lhs - rhs).norm() <= 1e-9 * scale);
    }
}
