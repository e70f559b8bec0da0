//! Integral-level identities checked at numeric points.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde_json::json;

use super::bracket::{bracket, BracketValue, Selector};
use super::point::NumericPoint;
use super::QintegralError;
use crate::macdonald::macdonald_onerow;
use crate::report::{Check, Report};
use crate::ring::{Assignment, RatFunc};
use crate::rmatrix::{
    apply_product_induced, r_coeffs, transport_roots, InducedMatrix, InducedVec, QkzParams,
    Translation,
};
use crate::weyl::{coset_reps, epsilon, highest_root, orbit_sum, AffineRoot};

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

fn assignment(pt: &NumericPoint) -> Assignment {
    Assignment::new(pt.q, pt.t, &pt.y, Complex64::new(1.0, 0.0))
}

fn eval(f: &RatFunc, pt: &NumericPoint) -> Result<Complex64, QintegralError> {
    Ok(f.eval(&assignment(pt))?)
}

/// `(⟨φ_{w_1}⟩, …, ⟨φ_{w_{2n}}⟩)` at `pt`.
pub fn psi_vector(pt: &NumericPoint) -> Result<Vec<BracketValue>, QintegralError> {
    (1..=2 * pt.rank())
        .into_par_iter()
        .map(|k| bracket(Selector::Phi(k), pt))
        .collect()
}

fn all_converged(v: &[BracketValue]) -> bool {
    v.iter().all(|b| b.converged)
}

fn terms(v: &[BracketValue]) -> usize {
    v.iter().map(|b| b.terms_used).sum()
}

fn params_for(pt: &NumericPoint, p: &QkzParams) -> Result<(), QintegralError> {
    if p.n != pt.rank() || p.lambda != pt.lambda {
        return Err(QintegralError::BadParameter(format!(
            "parameters (n={}, lambda={}) do not match the point (n={}, lambda={})",
            p.n,
            p.lambda,
            pt.rank(),
            pt.lambda
        )));
    }
    Ok(())
}

/// `q^λ⟨s_0φ_{w_1}⟩ = a⟨φ_{w_{2n}}⟩ + q^λ d⟨φ_{w_1}⟩` and
/// `q^{−λ}⟨s_0φ_{w_{2n}}⟩ = q^{−λ} b⟨φ_{w_{2n}}⟩ + c⟨φ_{w_1}⟩`, with
/// `a, b, c, d` taken at `δ − θ`.
pub fn verify_s0_relations(pt: &NumericPoint, p: &QkzParams) -> Report {
    let mut report = Report::new();
    let base = json!({"n": pt.rank(), "lambda": pt.lambda, "perturbation": p.perturbation});
    let run = || -> Result<Vec<Check>, QintegralError> {
        params_for(pt, p)?;
        let n = pt.rank();
        let root =
            AffineRoot::new(highest_root(n).iter().map(|c| -c).collect(), 1).expect("valid root");
        let rc = r_coeffs(&root, p);
        let (a, b, c, d) = (
            eval(&rc.a, pt)?,
            eval(&rc.b, pt)?,
            eval(&rc.c, pt)?,
            eval(&rc.d, pt)?,
        );
        let ql = pt.q.powi(pt.lambda as i32);
        let vals: Vec<BracketValue> = [
            Selector::S0Phi(1),
            Selector::S0Phi(2 * n),
            Selector::Phi(1),
            Selector::Phi(2 * n),
        ]
        .par_iter()
        .map(|&s| bracket(s, pt))
        .collect::<Result<_, _>>()?;
        let (s1, s2n, f1, f2n) = (vals[0].value, vals[1].value, vals[2].value, vals[3].value);
        let conv = all_converged(&vals);
        let used = terms(&vals);
        let r1 = rel(s1 * ql, a * f2n + d * f1 * ql);
        let r2 = rel(s2n / ql, b * f2n / ql + c * f1);
        Ok(vec![
            Check::numeric(
                "q^l <s0 phi_1> = a <phi_2n> + q^l d <phi_1>",
                base.clone(),
                r1,
                pt.tol,
                conv,
                used,
                pt.to_json(),
            ),
            Check::numeric(
                "q^-l <s0 phi_2n> = q^-l b <phi_2n> + c <phi_1>",
                base.clone(),
                r2,
                pt.tol,
                conv,
                used,
                pt.to_json(),
            ),
        ])
    };
    match run() {
        Ok(cs) => cs.into_iter().for_each(|c| report.push(c)),
        Err(e) => report.push(Check::error("s0 relations", base, e)),
    }
    report
}

/// `⟨s_0 φ_{w_k}⟩ = ⟨φ_{w_k}⟩` for `1 < k < 2n`.
pub fn verify_s0_fixed(pt: &NumericPoint) -> Report {
    let n = pt.rank();
    (2..2 * n)
        .into_par_iter()
        .map(|k| {
            let params = json!({"n": n, "lambda": pt.lambda, "k": k});
            let name = format!("<s0 phi_{k}> = <phi_{k}>");
            match (
                bracket(Selector::S0Phi(k), pt),
                bracket(Selector::Phi(k), pt),
            ) {
                (Ok(a), Ok(b)) => Check::numeric(
                    name,
                    params,
                    rel(a.value, b.value),
                    pt.tol,
                    a.converged && b.converged,
                    a.terms_used + b.terms_used,
                    pt.to_json(),
                ),
                (Err(e), _) | (_, Err(e)) => Check::error(name, params, e),
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

fn transport_matrix(
    sel: Translation,
    p: &QkzParams,
    reverse: bool,
) -> Result<InducedMatrix, QintegralError> {
    let mut roots = transport_roots(sel, p.n);
    if reverse {
        roots.reverse();
    }
    let cols = (1..=2 * p.n)
        .map(|k| apply_product_induced(&roots, &InducedVec::unit(k, p), p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(InducedMatrix::from_columns(cols))
}

/// The QKZ equations in the form `L_{ε_i} Ψ = P_{ε_i} R_{τ(ε_i)} Ψ`:
/// the left side shifts `y_i ↦ q y_i` and recomputes every bracket, the
/// right side applies the transport operator at `y` and the diagonal
/// `q^{⟨ε_i, w_k u⟩}`, `u = −λ ε_1`. The last equation is the same for
/// `τ(½Σε_j)` with `y ↦ q^{1/2} y`. `reverse_product` reverses the order of
/// the R-matrix factors.
pub fn verify_qkz(pt: &NumericPoint, reverse_product: bool) -> Report {
    let n = pt.rank();
    let p = QkzParams::new(n, pt.lambda);
    let psi = match psi_vector(pt) {
        Ok(v) => v,
        Err(e) => {
            return [Check::error("QKZ", json!({"n": n}), e)]
                .into_iter()
                .collect()
        }
    };
    let psi_vals: Vec<Complex64> = psi.iter().map(|b| b.value).collect();
    let images: Vec<Vec<i32>> = coset_reps(n)
        .iter()
        .map(|w| w.apply(&epsilon(1, n)).expect("rank"))
        .collect();
    let sels: Vec<Translation> = (1..=n)
        .map(Translation::Eps)
        .chain([Translation::HalfSum])
        .collect();
    sels.par_iter()
        .map(|&sel| {
            let params = json!({"n": n, "lambda": pt.lambda, "translation": sel.to_string(),
                                "reverse_product": reverse_product});
            let name = format!("L Psi = P R[{sel}] Psi");
            let run = || -> Result<Check, QintegralError> {
                let (shifted, diag): (NumericPoint, Vec<f64>) = match sel {
                    Translation::Eps(i) => (
                        pt.shifted(i)?,
                        images
                            .iter()
                            .map(|w| pt.q.powi(-(pt.lambda as i32) * w[i - 1]))
                            .collect(),
                    ),
                    Translation::HalfSum => (
                        pt.half_shifted()?,
                        images
                            .iter()
                            .map(|w| {
                                pt.q.sqrt()
                                    .powi(-(pt.lambda as i32) * w.iter().sum::<i32>())
                            })
                            .collect(),
                    ),
                };
                let lhs = psi_vector(&shifted)?;
                let m = transport_matrix(sel, &p, reverse_product)?.eval(&assignment(pt))?;
                let mut worst = 0.0f64;
                let scale = lhs
                    .iter()
                    .map(|b| b.value.norm())
                    .fold(0.0, f64::max)
                    .max(1e-300);
                for (k, row) in m.iter().enumerate() {
                    let rhs: Complex64 = row
                        .iter()
                        .zip(&psi_vals)
                        .map(|(a, b)| a * b)
                        .sum::<Complex64>()
                        * diag[k];
                    worst = worst.max((lhs[k].value - rhs).norm() / scale);
                }
                Ok(Check::numeric(
                    name.clone(),
                    params.clone(),
                    worst,
                    pt.tol,
                    all_converged(&lhs) && all_converged(&psi),
                    terms(&lhs) + terms(&psi),
                    pt.to_json(),
                ))
            };
            run().unwrap_or_else(|e| Check::error(name.clone(), params.clone(), e))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// A random point with `|y_j| ∈ [0.8, 1.4]` and uniform phases; redrawn
/// until generic.
pub fn random_point<R: Rng>(base: &NumericPoint, rng: &mut R) -> NumericPoint {
    loop {
        let y: Vec<Complex64> = (0..base.rank())
            .map(|_| {
                Complex64::from_polar(
                    rng.gen_range(0.8..1.4),
                    rng.gen_range(0.0..std::f64::consts::TAU),
                )
            })
            .collect();
        if let Ok(p) = base.at(y) {
            return p;
        }
    }
}

/// `⟨1⟩ / P_{(λ,0,…,0)}(y)` is the same at `samples` random points. With
/// `wrong_poly` the denominator is replaced by `m_{(1,1,0,…)}` (or
/// `m_{(λ+1)}` at rank one).
pub fn ratio_test_macdonald(
    base: &NumericPoint,
    samples: usize,
    seed: u64,
    wrong_poly: bool,
) -> Report {
    let n = base.rank();
    let params = json!({"n": n, "lambda": base.lambda, "samples": samples, "seed": seed,
                        "wrong_poly": wrong_poly});
    let name = "<1> / P is constant in y";
    let run = || -> Result<Check, QintegralError> {
        if samples < 3 {
            return Err(QintegralError::BadParameter(
                "need at least 3 samples".into(),
            ));
        }
        let poly: RatFunc = if wrong_poly {
            let mut mu = vec![0; n];
            if n >= 2 {
                mu[0] = 1;
                mu[1] = 1;
            } else {
                mu[0] = base.lambda as i32 + 1;
            }
            RatFunc::from_poly(orbit_sum(&mu, n).expect("partition"))
        } else {
            macdonald_onerow(n, base.lambda)?.to_ratfunc()
        };
        let mut rng = SplitMix64::seed_from_u64(seed);
        let mut ratios = Vec::with_capacity(samples);
        let mut conv = true;
        let mut used = 0;
        while ratios.len() < samples {
            let pt = random_point(base, &mut rng);
            let pv = eval(&poly, &pt)?;
            if pv.norm() < 1e-10 {
                continue;
            }
            let b = bracket(Selector::One, &pt)?;
            conv &= b.converged;
            used += b.terms_used;
            ratios.push(b.value / pv);
        }
        let r0 = ratios[0];
        let worst = ratios
            .iter()
            .map(|r| (r - r0).norm() / r0.norm())
            .fold(0.0, f64::max);
        Ok(Check::numeric(
            name,
            params.clone(),
            worst,
            base.tol,
            conv,
            used,
            base.to_json(),
        ))
    };
    [run().unwrap_or_else(|e| Check::error(name, params.clone(), e))]
        .into_iter()
        .collect()
}

/// `Σ t^{i−1}⟨φ_{w_i}⟩ = (1 − q^λ t^{2n})/(1 − t) ⟨1⟩` and the shift
/// identity `⟨Π (1−y_j^{±1}/x)/(1−t y_j^{±1}/x)⟩ = q^λ ⟨1⟩`. With
/// `drop_last` the last term of the sum is left out.
pub fn verify_bracket_sum(pt: &NumericPoint, drop_last: bool) -> Report {
    let n = pt.rank();
    let params = json!({"n": n, "lambda": pt.lambda, "drop_last_term": drop_last});
    let run = || -> Result<Vec<Check>, QintegralError> {
        let psi = psi_vector(pt)?;
        let one = bracket(Selector::One, pt)?;
        let ratio = bracket(Selector::FullRatio, pt)?;
        let upto = if drop_last { 2 * n - 1 } else { 2 * n };
        let sum: Complex64 = (0..upto).map(|i| psi[i].value * pt.t.powi(i as i32)).sum();
        let ql = pt.q.powi(pt.lambda as i32);
        let want = one.value * (1.0 - ql * pt.t.powi(2 * n as i32)) / (1.0 - pt.t);
        let conv = all_converged(&psi) && one.converged;
        Ok(vec![
            Check::numeric(
                "sum t^(i-1) <phi_i> = (1 - q^l t^2n)/(1 - t) <1>",
                params.clone(),
                rel(sum, want),
                pt.tol,
                conv,
                terms(&psi) + one.terms_used,
                pt.to_json(),
            ),
            Check::numeric(
                "<prod ratio> = q^l <1>",
                params.clone(),
                rel(ratio.value, one.value * ql),
                pt.tol,
                one.converged && ratio.converged,
                one.terms_used + ratio.terms_used,
                pt.to_json(),
            ),
        ])
    };
    match run() {
        Ok(cs) => cs.into_iter().collect(),
        Err(e) => [Check::error("weighted bracket sum", params, e)]
            .into_iter()
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::Perturbation;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn show(r: &Report) {
        for ch in &r.checks {
            eprintln!("{} {:?} {:?}", ch.identity, ch.residual, ch.counterexample);
        }
    }

    #[test]
    fn s0_relations_rank_one_and_two() {
        let pt = NumericPoint::new(0.3, 0.7, vec![c(0.9)], 1).unwrap();
        let r = verify_s0_relations(&pt, &QkzParams::new(1, 1));
        show(&r);
        assert!(r.passed());
        let pt = NumericPoint::new(0.25, 0.6, vec![c(0.9), c(1.3)], 2).unwrap();
        let r = verify_s0_relations(&pt, &QkzParams::new(2, 2));
        show(&r);
        assert!(r.passed());
        let bad = QkzParams::new(2, 2).with_perturbation(Perturbation::DPlusOne);
        assert!(!verify_s0_relations(&pt, &bad).passed());
    }

    #[test]
    fn s0_fixes_middle_entries() {
        let pt = NumericPoint::new(0.3, 0.7, vec![c(0.9), c(1.3)], 1).unwrap();
        let r = verify_s0_fixed(&pt);
        show(&r);
        assert!(r.passed());
    }

    #[test]
    fn qkz_small() {
        let pt = NumericPoint::new(0.3, 0.7, vec![c(0.9)], 1).unwrap();
        let r = verify_qkz(&pt, false);
        show(&r);
        assert!(r.passed());
        let pt = NumericPoint::new(0.25, 0.6, vec![c(0.9), c(1.3)], 2).unwrap();
        let r = verify_qkz(&pt, false);
        show(&r);
        assert!(r.passed());
        let r = verify_qkz(&pt, true);
        show(&r);
        assert!(r.checks.iter().any(|ch| ch.residual.unwrap_or(0.0) > 1e-3));
    }

    #[test]
    fn ratio_small() {
        let base = NumericPoint::new(0.3, 0.7, vec![c(0.9)], 1).unwrap();
        let r = ratio_test_macdonald(&base, 5, 7, false);
        show(&r);
        assert!(r.passed());
        let base = NumericPoint::new(0.25, 0.6, vec![c(0.9), c(1.3)], 2).unwrap();
        assert!(ratio_test_macdonald(&base, 5, 7, false).passed());
        let base = NumericPoint::new(0.25, 0.6, vec![c(0.9), c(1.3)], 1).unwrap();
        assert!(!ratio_test_macdonald(&base, 5, 7, true).passed());
    }

    #[test]
    fn bracket_sum_small() {
        let pt = NumericPoint::new(0.3, 0.7, vec![c(0.9), c(1.3)], 1).unwrap();
        let r = verify_bracket_sum(&pt, false);
        show(&r);
        assert!(r.passed());
        assert!(!verify_bracket_sum(&pt, true).passed());
        let pt = NumericPoint::new(0.25, 0.5, vec![c(0.9)], 2).unwrap();
        assert!(verify_bracket_sum(&pt, false).passed());
    }
}
