//! The difference operator `E` preserves `W`-invariance and is linear.

use cnqkz::macdonald::apply_e;
use cnqkz::ring::{rat, RatFunc};
use cnqkz::weyl::{act_on_ratfunc, orbit_sum, SignedPerm};
use proptest::prelude::*;

fn symmetric(n: usize, parts: &[(i32, i32, i64)]) -> RatFunc {
    let mut acc = RatFunc::zero(n + 3);
    for &(a, b, c) in parts {
        let mut mu = vec![a.max(b), a.min(b)];
        mu.truncate(n);
        let m = orbit_sum(&mu, n).unwrap();
        acc = &acc + &RatFunc::from_poly(m.scale(&rat(c, 1)));
    }
    acc
}

fn is_invariant(f: &RatFunc, n: usize) -> bool {
    (1..=n).all(|i| {
        let s = SignedPerm::simple_reflection(i, n).unwrap();
        act_on_ratfunc(&s, f).unwrap() == *f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn e_keeps_invariants_invariant(
        n in 1usize..=2,
        parts in prop::collection::vec((0i32..=2, 0i32..=1, -3i64..=3), 1..3),
    ) {
        let f = symmetric(n, &parts);
        prop_assert!(is_invariant(&f, n));
        prop_assert!(is_invariant(&apply_e(&f), n));
    }

    #[test]
    fn e_is_linear(
        n in 1usize..=2,
        a in prop::collection::vec((0i32..=2, 0i32..=1, -3i64..=3), 1..3),
        b in prop::collection::vec((0i32..=2, 0i32..=1, -3i64..=3), 1..3),
        k in -3i64..=3,
    ) {
        let f = symmetric(n, &a);
        let g = symmetric(n, &b);
        let lhs = apply_e(&(&f + &g.scale(&rat(k, 1))));
        let rhs = &apply_e(&f) + &apply_e(&g).scale(&rat(k, 1));
        prop_assert_eq!(lhs, rhs);
    }
}
