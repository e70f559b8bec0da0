//! Symmetry of the brackets in `y` and stability under finer truncation.

use cnqkz::qintegral::{bracket, NumericPoint, Selector};
use num_complex::Complex64;
use proptest::prelude::*;

fn y_strategy(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((0.8f64..1.4, 0.0f64..std::f64::consts::TAU), n).prop_map(|v| {
        v.into_iter()
            .map(|(r, th)| Complex64::from_polar(r, th))
            .collect()
    })
}

fn setup() -> impl Strategy<Value = (u32, f64, f64, Vec<Complex64>)> {
    (1u32..=2, 0.15f64..0.45, 0.3f64..0.85, y_strategy(2))
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symmetric_brackets_are_w_invariant((lambda, q, t, y) in setup()) {
        let Ok(pt) = NumericPoint::new(q, t, y.clone(), lambda) else { return Ok(()) };
        let swapped = pt.at(vec![y[1], y[0]]).unwrap();
        let inverted = pt.at(vec![y[0], y[1].inv()]).unwrap();
        for sel in [Selector::One, Selector::FullRatio] {
            let b = bracket(sel, &pt).unwrap();
            prop_assert!(b.converged);
            for other in [&swapped, &inverted] {
                let c = bracket(sel, other).unwrap();
                prop_assert!(close(b.value, c.value, 1e-10), "{:?}: {} vs {}", sel, b.value, c.value);
            }
        }
    }

    #[test]
    fn finer_truncation_agrees((lambda, q, t, y) in setup(), k in 1usize..=4) {
        let Ok(pt) = NumericPoint::new(q, t, y, lambda) else { return Ok(()) };
        let fine = pt.clone().with_truncation(pt.prod_trunc + 40, pt.ladder_trunc + 200);
        let sel = Selector::Phi(k);
        let a = bracket(sel, &pt).unwrap();
        let b = bracket(sel, &fine).unwrap();
        prop_assert!(a.converged && b.converged);
        prop_assert!(close(a.value, b.value, 1e-12), "{} vs {}", a.value, b.value);
    }
}
