//! Group laws of signed permutations and invariance of orbit sums.

use cnqkz::weyl::{
    act_on_poly, all_roots, coset_index, coset_reps, epsilon, orbit_sum, reflect, reflection,
    SignedPerm,
};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = SignedPerm> {
    let order = Just((1..=n as i32).collect::<Vec<i32>>()).prop_shuffle();
    (order, prop::collection::vec(any::<bool>(), n)).prop_map(|(order, signs)| {
        let images = order
            .iter()
            .zip(&signs)
            .map(|(&i, &neg)| if neg { -i } else { i });
        SignedPerm::from_images(images.collect()).unwrap()
    })
}

fn rank_and_perm() -> impl Strategy<Value = (usize, SignedPerm, SignedPerm)> {
    (1usize..=4).prop_flat_map(|n| (Just(n), perm(n), perm(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn group_laws((n, a, b) in rank_and_perm()) {
        let id = SignedPerm::identity(n);
        prop_assert_eq!(a.compose(&a.inverse()).unwrap(), id.clone());
        prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
        // (ab)^{-1} = b^{-1} a^{-1}
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.inverse(), b.inverse().compose(&a.inverse()).unwrap());
        // the action is compatible with composition
        let e1 = epsilon(1, n);
        prop_assert_eq!(ab.apply(&e1).unwrap(), a.apply(&b.apply(&e1).unwrap()).unwrap());
    }

    #[test]
    fn coset_index_reads_image_of_e1((n, a, _b) in rank_and_perm()) {
        let k = coset_index(&a);
        let rep = &coset_reps(n)[k - 1];
        let e1 = epsilon(1, n);
        prop_assert_eq!(rep.apply(&e1).unwrap(), a.apply(&e1).unwrap());
    }

    #[test]
    fn action_permutes_roots((n, a, _b) in rank_and_perm()) {
        let roots = all_roots(n);
        for r in &roots {
            let img = a.apply(r).unwrap();
            prop_assert!(roots.contains(&img));
        }
    }

    #[test]
    fn reflections_are_involutions(n in 1usize..=4, idx in 0usize..64) {
        let roots = all_roots(n);
        let alpha = &roots[idx % roots.len()];
        let s = reflection(alpha).unwrap();
        prop_assert!(s.compose(&s).unwrap().is_identity());
        prop_assert_eq!(s.apply(alpha).unwrap(), reflect(alpha, alpha));
        prop_assert_eq!(reflect(alpha, alpha), alpha.iter().map(|c| -c).collect::<Vec<_>>());
    }

    #[test]
    fn orbit_sums_are_invariant(
        (n, a, _b) in rank_and_perm(),
        parts in prop::collection::vec(0i32..=3, 4),
    ) {
        let mut mu: Vec<i32> = parts[..n].to_vec();
        mu.sort_unstable_by(|x, y| y.cmp(x));
        let m = orbit_sum(&mu, n).unwrap();
        prop_assert_eq!(act_on_poly(&a, &m).unwrap(), m);
    }
}
