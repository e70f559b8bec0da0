//! Exact checks of the R-matrix relations: inversion, intertwining with
//! `r_w`, the Yang-Baxter equation, and the induced-module lemmas.

use rayon::prelude::*;
use serde_json::json;

use super::coeffs::{r_coeffs, QkzParams};
use super::full::{apply_product_full, apply_r_full, apply_rw, FullVec};
use super::induced::{
    apply_r_induced, apply_r_induced_via_full, embed, transport_roots, InducedVec, Translation,
};
use crate::report::{Check, Report};
use crate::ring::RatFunc;
use crate::weyl::{
    all_roots, coset_index, coset_reps, highest_root, simple_root, AffineRoot, SignedPerm,
};

fn root(v: Vec<i32>, m: i32) -> AffineRoot {
    AffineRoot::new(v, m).expect("valid root")
}

fn eps_combo(n: usize, terms: &[(i32, usize)]) -> Vec<i32> {
    crate::weyl::roots::combo(n, terms)
}

fn params_json(p: &QkzParams) -> serde_json::Value {
    json!({
        "n": p.n,
        "lambda": p.lambda,
        "t_short": p.t_short,
        "t_long": p.t_long,
        "perturbation": p.perturbation,
    })
}

fn word(roots: &[AffineRoot]) -> String {
    roots
        .iter()
        .map(|r| format!("R[{r}]"))
        .collect::<Vec<_>>()
        .join("*")
}

/// Compares two operator words on every basis vector `h_y`.
fn compare_products(
    identity: String,
    lhs: &[AffineRoot],
    rhs: &[AffineRoot],
    p: &QkzParams,
) -> Check {
    let r = p.ambient();
    let bad = SignedPerm::enumerate(p.n).into_par_iter().find_first(|y| {
        let h = FullVec::basis(y.clone(), r.fone());
        let a = apply_product_full(lhs, &h, p);
        let b = apply_product_full(rhs, &h, p);
        !a.frac_equal(&b)
    });
    let mut params = params_json(p);
    params["lhs"] = json!(word(lhs));
    params["rhs"] = json!(word(rhs));
    Check::exact(identity, params, bad.is_none(), || {
        format!("differs on h_{}", bad.unwrap())
    })
}

/// Both Yang-Baxter families on the full module.
pub fn verify_ybe(p: &QkzParams) -> Report {
    let n = p.n;
    let mut report = Report::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let a = root(eps_combo(n, &[(1, i), (-1, j)]), 0);
                let b = root(eps_combo(n, &[(1, i), (-1, k)]), 0);
                let c = root(eps_combo(n, &[(1, j), (-1, k)]), 0);
                report.push(compare_products(
                    format!("ybe A-type ({i},{j},{k})"),
                    &[a.clone(), b.clone(), c.clone()],
                    &[c, b, a],
                    p,
                ));
            }
            let a = root(eps_combo(n, &[(1, i), (-1, j)]), 0);
            let b = root(eps_combo(n, &[(2, i)]), 0);
            let c = root(eps_combo(n, &[(1, i), (1, j)]), 0);
            let d = root(eps_combo(n, &[(2, j)]), 0);
            report.push(compare_products(
                format!("ybe C-type ({i},{j})"),
                &[a.clone(), b.clone(), c.clone(), d.clone()],
                &[d, c, b, a],
                p,
            ));
        }
    }
    report
}

/// `R_β R_{−β} = id` for every `β = α + mδ`, `α ∈ Δ`, `m ∈ {−1, 0, 1}`.
pub fn verify_inverse(p: &QkzParams) -> Report {
    let n = p.n;
    let r = p.ambient();
    let mut report = Report::new();
    for alpha in all_roots(n) {
        for m in -1..=1 {
            let beta = root(alpha.clone(), m);
            let neg = beta.neg();
            let bad = SignedPerm::enumerate(n).into_par_iter().find_first(|y| {
                let h = FullVec::basis(y.clone(), r.fone());
                let out = apply_r_full(&beta, &apply_r_full(&neg, &h, p), p);
                !out.frac_equal(&h)
            });
            let mut params = params_json(p);
            params["beta"] = json!(beta.to_string());
            report.push(Check::exact(
                format!("R[{beta}] R[{}] = id", neg),
                params,
                bad.is_none(),
                || format!("differs on h_{}", bad.unwrap()),
            ));
        }
    }
    report
}

/// `r_w R_α = R_{w(α)} r_w` for `w ∈ {e, s_1, …, s_n}`, `α ∈ Δ`, `m ∈ {0, 1}`.
pub fn verify_conjugation(p: &QkzParams) -> Report {
    let n = p.n;
    let r = p.ambient();
    let mut ws = vec![(String::from("e"), SignedPerm::identity(n))];
    for i in 1..=n {
        ws.push((
            format!("s{i}"),
            SignedPerm::simple_reflection(i, n).unwrap(),
        ));
    }
    let mut report = Report::new();
    for (name, w) in &ws {
        for alpha in all_roots(n) {
            for m in 0..=1 {
                let a = root(alpha.clone(), m);
                let wa = root(w.apply(&alpha).unwrap(), m);
                let bad = SignedPerm::enumerate(n).into_par_iter().find_first(|y| {
                    let h = FullVec::basis(y.clone(), r.fone());
                    let lhs = apply_rw(w, &apply_r_full(&a, &h, p));
                    let rhs = apply_r_full(&wa, &apply_rw(w, &h), p);
                    !lhs.frac_equal(&rhs)
                });
                let mut params = params_json(p);
                params["w"] = json!(name);
                params["alpha"] = json!(a.to_string());
                report.push(Check::exact(
                    format!("r_{name} R[{a}] = R[{wa}] r_{name}"),
                    params,
                    bad.is_none(),
                    || format!("differs on h_{}", bad.unwrap()),
                ));
            }
        }
    }
    report
}

/// `r_w` on the induced module: `w(f_k)` moves to the coset of `w w_k`.
pub fn apply_rw_induced(w: &SignedPerm, v: &InducedVec) -> InducedVec {
    let n = v.rank();
    let reps = coset_reps(n);
    let mut out = vec![RatFunc::zero(n + 3); 2 * n];
    for (k, rep) in reps.iter().enumerate() {
        let target = coset_index(&w.compose(rep).unwrap());
        out[target - 1] = crate::weyl::act_on_ratfunc(w, v.get(k + 1)).unwrap();
    }
    InducedVec::new(out)
}

/// Lemmas on the induced module: `h̄_e` is `W_{ε_1}`-invariant, the coset
/// sums permute under `s_i` and `s_θ`, the closed-form actions of `R_{α_i}`
/// and `R_{δ−θ}`, and agreement of the induced action with the full module
/// for every root occurring in a transport operator.
pub fn verify_induced(p: &QkzParams) -> Report {
    let n = p.n;
    let r = p.ambient();
    let mut report = Report::new();
    let base = params_json(p);

    // h̄_e invariance under s_2..s_n.
    let he = embed(&InducedVec::unit(1, p));
    for i in 2..=n {
        let s = SignedPerm::simple_reflection(i, n).unwrap();
        let ok = apply_rw(&s, &he).frac_equal(&he);
        report.push(Check::exact(
            format!("r_s{i} hbar_e = hbar_e"),
            base.clone(),
            ok,
            || format!("s{i} moves hbar_e"),
        ));
    }

    // Coset sums fixed by s_i, s_θ outside the mixing indices.
    let s_theta = crate::weyl::reflection(&highest_root(n)).unwrap();
    let mut movers: Vec<(String, SignedPerm, Vec<usize>)> = Vec::new();
    for i in 1..n {
        movers.push((
            format!("s{i}"),
            SignedPerm::simple_reflection(i, n).unwrap(),
            vec![i, i + 1, 2 * n - i, 2 * n - i + 1],
        ));
    }
    movers.push((
        format!("s{n}"),
        SignedPerm::simple_reflection(n, n).unwrap(),
        vec![n, n + 1],
    ));
    movers.push(("s_theta".into(), s_theta, vec![1, 2 * n]));
    let reps = coset_reps(n);
    for (name, w, excluded) in &movers {
        let bad = (1..=2 * n)
            .filter(|k| !excluded.contains(k))
            .find(|&k| coset_index(&w.compose(&reps[k - 1]).unwrap()) != k);
        report.push(Check::exact(
            format!("hbar_({name} w_k) = hbar_w_k off the mixing indices"),
            base.clone(),
            bad.is_none(),
            || format!("k = {}", bad.unwrap()),
        ));
    }

    // Closed forms of R_{α_i} and R_{δ−θ} checked against the full module,
    // plus the identity action off the mixing indices.
    let mut special: Vec<(AffineRoot, Vec<usize>)> = (1..=n)
        .map(|i| {
            let mix = if i < n {
                vec![i, i + 1, 2 * n - i, 2 * n - i + 1]
            } else {
                vec![n, n + 1]
            };
            (root(simple_root(i, n).unwrap(), 0), mix)
        })
        .collect();
    let neg_theta: Vec<i32> = highest_root(n).iter().map(|c| -c).collect();
    special.push((root(neg_theta, 1), vec![1, 2 * n]));
    for (rt, mix) in &special {
        let rc = r_coeffs(rt, p);
        let mut bad = None;
        for k in 1..=2 * n {
            let e = InducedVec::unit(k, p);
            let fast = match apply_r_induced(rt, &e, p) {
                Ok(v) => v,
                Err(err) => {
                    bad = Some(format!("k={k}: {err}"));
                    break;
                }
            };
            let full = match apply_r_induced_via_full(rt, &e, p) {
                Ok(v) => v,
                Err(err) => {
                    bad = Some(format!("k={k}: {err}"));
                    break;
                }
            };
            if !fast.frac_equal(&full) {
                bad = Some(format!("closed form differs from full module on hbar_w{k}"));
                break;
            }
            if !mix.contains(&k) && !full.frac_equal(&e) {
                bad = Some(format!("R does not fix hbar_w{k}"));
                break;
            }
        }
        // Coefficient placement in the two-term cases.
        if bad.is_none() {
            let (p1, p2, sb, sd) = if rt.m == 1 {
                let lam = p.lambda as i32;
                (2 * n, 1, r.q_pow(-lam), r.q_pow(lam))
            } else {
                (mix[0], mix[1], r.one(), r.one())
            };
            let v1 = apply_r_induced_via_full(rt, &InducedVec::unit(p1, p), p).unwrap();
            let v2 = apply_r_induced_via_full(rt, &InducedVec::unit(p2, p), p).unwrap();
            let ok = v1.get(p1).frac_equal(&rc.a)
                && v1.get(p2).frac_equal(&rc.b.mul_poly(&sb))
                && v2.get(p2).frac_equal(&rc.c)
                && v2.get(p1).frac_equal(&rc.d.mul_poly(&sd));
            if !ok {
                bad = Some(format!(
                    "two-term action on (hbar_w{p1}, hbar_w{p2}) is wrong"
                ));
            }
        }
        let mut params = base.clone();
        params["root"] = json!(rt.to_string());
        report.push(Check::exact(
            format!("induced action of R[{rt}]"),
            params,
            bad.is_none(),
            || bad.clone().unwrap(),
        ));
    }

    // Stability of the induced span under every transport factor.
    let mut sels: Vec<Translation> = (1..=n).map(Translation::Eps).collect();
    sels.push(Translation::HalfSum);
    let mut seen = std::collections::BTreeSet::new();
    for sel in sels {
        for rt in transport_roots(sel, n) {
            if !seen.insert(rt.clone()) {
                continue;
            }
            let bad = (1..=2 * n).find_map(|k| {
                let e = InducedVec::unit(k, p);
                match (
                    apply_r_induced(&rt, &e, p),
                    apply_r_induced_via_full(&rt, &e, p),
                ) {
                    (Ok(a), Ok(b)) if a.frac_equal(&b) => None,
                    (Ok(_), Ok(_)) => Some(format!("mismatch on hbar_w{k}")),
                    (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
                }
            });
            let mut params = base.clone();
            params["root"] = json!(rt.to_string());
            report.push(Check::exact(
                format!("induced span stable under R[{rt}]"),
                params,
                bad.is_none(),
                || bad.clone().unwrap(),
            ));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::coeffs::{Perturbation, TParam};

    #[test]
    fn ybe_rank_two() {
        let p = QkzParams::new(2, 1);
        let rep = verify_ybe(&p);
        assert_eq!(rep.len(), 1);
        assert!(rep.passed());
    }

    #[test]
    fn ybe_detects_perturbation() {
        let p = QkzParams::new(2, 1).with_perturbation(Perturbation::DPlusOne);
        assert!(!verify_ybe(&p).passed());
    }

    #[test]
    fn ybe_two_parameter_experiment() {
        let p = QkzParams::new(2, 1).with_t_long(TParam::Q);
        // Recorded, not asserted as a theorem; at rank two it holds.
        let _ = verify_ybe(&p).passed();
    }

    #[test]
    fn inverse_and_conjugation_rank_two() {
        let p = QkzParams::new(2, 1);
        assert!(verify_inverse(&p).passed());
        assert!(verify_conjugation(&p).passed());
    }

    #[test]
    fn conjugation_detects_non_equivariant_perturbation() {
        let p = QkzParams::new(2, 1).with_perturbation(Perturbation::DPlusY1);
        assert!(!verify_conjugation(&p).passed());
    }

    #[test]
    fn induced_lemmas_rank_two() {
        for lambda in [1, 2] {
            let rep = verify_induced(&QkzParams::new(2, lambda));
            assert!(rep.passed(), "{:?}", rep.failures().next());
        }
    }

    #[test]
    fn rw_induced_matches_full() {
        let p = QkzParams::new(2, 1);
        let r = p.ambient();
        let v = InducedVec::new(
            (1..=4)
                .map(|k| RatFunc::from_poly(r.mono(&[(crate::ring::Gen::Y(1), k)])))
                .collect(),
        );
        for i in 1..=2 {
            let s = SignedPerm::simple_reflection(i, 2).unwrap();
            let fast = apply_rw_induced(&s, &v);
            let full = apply_rw(&s, &embed(&v));
            assert!(embed(&fast).frac_equal(&full));
        }
    }
}
