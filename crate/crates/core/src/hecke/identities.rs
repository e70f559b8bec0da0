//! Exact identities for the `φ` basis: the Weyl action lemmas, the two-term
//! partial-fraction identities behind them, the weighted sum identity, and
//! the integrand-level form of `r_{s_i} Ψ = R_{α_i} Ψ`.

use serde_json::json;

use super::phi::{lin, phi, plain, with_t, PhiBasis};
use crate::report::{Check, Report};
use crate::ring::{int, Ambient, ExponentVector, Gen, RatFunc, Substitution};
use crate::rmatrix::verify::apply_rw_induced;
use crate::rmatrix::{apply_r_induced, r_coeffs, InducedVec, QkzParams, RCoeffs};
use crate::weyl::{act_on_ratfunc, highest_root, simple_root, AffineRoot, SignedPerm};

fn simple_coeffs(i: usize, p: &QkzParams) -> RCoeffs {
    r_coeffs(
        &AffineRoot::finite(simple_root(i, p.n).unwrap()).unwrap(),
        p,
    )
}

fn delta_minus_theta(p: &QkzParams) -> AffineRoot {
    AffineRoot::new(highest_root(p.n).iter().map(|c| -c).collect(), 1).unwrap()
}

fn pj(p: &QkzParams) -> serde_json::Value {
    json!({"n": p.n, "perturbation": p.perturbation})
}

/// Fixed points `s_i φ_{w_k} = φ_{w_k}` off the mixing indices,
/// and the two-term mixing relations on them.
pub fn verify_si_action(p: &QkzParams) -> Report {
    let n = p.n;
    let basis = phi(n);
    let mut report = Report::new();
    for i in 1..=n {
        let s = SignedPerm::simple_reflection(i, n).unwrap();
        let moved: Vec<usize> = if i < n {
            vec![i, i + 1, 2 * n - i, 2 * n - i + 1]
        } else {
            vec![n, n + 1]
        };
        for k in (1..=2 * n).filter(|k| !moved.contains(k)) {
            let ok = act_on_ratfunc(&s, basis.get(k)).unwrap() == *basis.get(k);
            let mut params = pj(p);
            params["i"] = json!(i);
            params["k"] = json!(k);
            report.push(Check::exact(
                format!("s{i} phi_{k} = phi_{k}"),
                params,
                ok,
                || "not fixed".into(),
            ));
        }
        let rc = simple_coeffs(i, p);
        let pairs: Vec<(usize, usize)> = if i < n {
            vec![(i, i + 1), (2 * n - i, 2 * n - i + 1)]
        } else {
            vec![(n, n + 1)]
        };
        for (lo, hi) in pairs {
            let (fl, fh) = (basis.get(lo), basis.get(hi));
            let s_hi = act_on_ratfunc(&s, fh).unwrap();
            let s_lo = act_on_ratfunc(&s, fl).unwrap();
            let want_hi = &(&rc.a * fl) + &(&rc.d * fh);
            let want_lo = &(&rc.b * fl) + &(&rc.c * fh);
            let mut params = pj(p);
            params["i"] = json!(i);
            report.push(Check::exact(
                format!("s{i} phi_{hi} = a phi_{lo} + d phi_{hi}"),
                params.clone(),
                s_hi == want_hi,
                || "mismatch".into(),
            ));
            report.push(Check::exact(
                format!("s{i} phi_{lo} = b phi_{lo} + c phi_{hi}"),
                params,
                s_lo == want_lo,
                || "mismatch".into(),
            ));
        }
    }
    report
}

fn two_term(
    report: &mut Report,
    name: String,
    params: serde_json::Value,
    lhs: RatFunc,
    rhs: RatFunc,
) {
    let ok = lhs == rhs;
    report.push(Check::exact(name, params, ok, || {
        format!("lhs {lhs} vs rhs {rhs}")
    }));
}

fn fr(num: crate::ring::LaurentPoly, den: crate::ring::LaurentPoly) -> RatFunc {
    RatFunc::new(num, den).expect("nonzero")
}

/// The eight two-term partial-fraction identities: four for each
/// `α_i (i<n)`, two for `α_n`, two for `δ−θ`.
pub fn verify_partial_fractions(p: &QkzParams) -> Report {
    let n = p.n;
    let r = Ambient::new(n);
    let one = r.one();
    let mut report = Report::new();
    // A generic template: for "linear forms" A, B (the t-denominators) and
    // the matching numerators NA, NB,
    //   NB'/(A B) = a/A + d NA/(A B),    1/B = b/A + c NA/(A B).
    let mut push_pair = |label_a: String,
                         label_b: String,
                         rc: &RCoeffs,
                         den_a: crate::ring::LaurentPoly,
                         den_b: crate::ring::LaurentPoly,
                         num_a: crate::ring::LaurentPoly,
                         num_b: crate::ring::LaurentPoly,
                         params: serde_json::Value| {
        let ab = &den_a * &den_b;
        let lhs1 = fr(num_b, ab.clone());
        let rhs1 =
            &(&rc.a * &fr(one.clone(), den_a.clone())) + &(&rc.d * &fr(num_a.clone(), ab.clone()));
        two_term(&mut report, label_a, params.clone(), lhs1, rhs1);
        let lhs2 = fr(one.clone(), den_b);
        let rhs2 = &(&rc.b * &fr(one.clone(), den_a)) + &(&rc.c * &fr(num_a, ab));
        two_term(&mut report, label_b, params, lhs2, rhs2);
    };
    for i in 1..n {
        let rc = simple_coeffs(i, p);
        let mut params = pj(p);
        params["i"] = json!(i);
        push_pair(
            format!("partial fractions y^-1 pair i={i} (a,d)"),
            format!("partial fractions y^-1 pair i={i} (b,c)"),
            &rc,
            with_t(&r, i, -1),
            with_t(&r, i + 1, -1),
            plain(&r, i, -1),
            plain(&r, i + 1, -1),
            params.clone(),
        );
        push_pair(
            format!("partial fractions y pair i={i} (a,d)"),
            format!("partial fractions y pair i={i} (b,c)"),
            &rc,
            with_t(&r, i + 1, 1),
            with_t(&r, i, 1),
            plain(&r, i + 1, 1),
            plain(&r, i, 1),
            params,
        );
    }
    let rc = simple_coeffs(n, p);
    push_pair(
        "partial fractions alpha_n (a,d)".into(),
        "partial fractions alpha_n (b,c)".into(),
        &rc,
        with_t(&r, n, -1),
        with_t(&r, n, 1),
        plain(&r, n, -1),
        plain(&r, n, 1),
        pj(p),
    );
    let rc = r_coeffs(&delta_minus_theta(p), p);
    push_pair(
        "partial fractions delta-theta (a,d)".into(),
        "partial fractions delta-theta (b,c)".into(),
        &rc,
        with_t(&r, 1, 1),
        lin(&r, &[(Gen::U, 2), (Gen::V, 2)], 1, -1),
        plain(&r, 1, 1),
        lin(&r, &[(Gen::V, 2)], 1, -1),
        pj(p),
    );
    report
}

/// `Σ_{i=1}^{2n} t^{i−1} φ_{w_i}` (optionally with the last term dropped).
pub fn weighted_phi_sum(basis: &PhiBasis, drop_last: bool) -> RatFunc {
    let n = basis.rank();
    let r = Ambient::new(n);
    let upto = if drop_last { 2 * n - 1 } else { 2 * n };
    (1..=upto).fold(r.fzero(), |acc, i| {
        &acc + &basis.get(i).mul_poly(&r.t().pow(i as u32 - 1))
    })
}

/// `Π_j (1−y_j/x)(1−y_j^{-1}/x) / ((1−t y_j/x)(1−t y_j^{-1}/x))`.
pub fn full_ratio(n: usize) -> RatFunc {
    let r = Ambient::new(n);
    let mut num = r.one();
    let mut den = r.one();
    for j in 1..=n {
        num = &(&num * &plain(&r, j, 1)) * &plain(&r, j, -1);
        den = &(&den * &with_t(&r, j, 1)) * &with_t(&r, j, -1);
    }
    fr(num, den)
}

/// `t^{2n} Π (…) = 1 + (t−1) Σ t^{i−1} φ_{w_i}`, plus its `t = 1`
/// specialization.
pub fn verify_weighted_phi_identity(n: usize, drop_last: bool) -> Report {
    let r = Ambient::new(n);
    let basis = phi(n);
    let lhs = full_ratio(n).mul_poly(&r.t().pow(2 * n as u32));
    let rhs = &r.fone() + &weighted_phi_sum(&basis, drop_last).mul_poly(&(&r.t() - &r.one()));
    let params = json!({"n": n, "drop_last_term": drop_last});
    let mut report = Report::new();
    let ok = lhs == rhs;
    report.push(Check::exact(
        "weighted phi sum identity",
        params.clone(),
        ok,
        || format!("lhs {lhs} vs rhs {rhs}"),
    ));
    let at_one = Substitution::identity(n).with(Gen::U, int(1), ExponentVector::zero(n + 3));
    let l1 = lhs.substitute(&at_one);
    let r1 = rhs.substitute(&at_one);
    let ok = matches!((&l1, &r1), (Ok(a), Ok(b)) if *a == r.fone() && *b == r.fone());
    report.push(Check::exact(
        "weighted phi sum identity at t=1",
        params,
        ok,
        || format!("{l1:?} / {r1:?}"),
    ));
    report
}

/// `Ψ̂ = Σ φ_{w_k} h̄_{w_k}` with integrands as coefficients.
pub fn psi_hat(n: usize) -> InducedVec {
    InducedVec::new(phi(n).entries().to_vec())
}

/// `r_{s_i} Ψ̂ = R_{α_i} Ψ̂` for `i = 1..n`; the `i = 0` case is covered by
/// the two `δ−θ` partial-fraction identities.
pub fn verify_reflection_integrand(p: &QkzParams) -> Report {
    let n = p.n;
    let psi = psi_hat(n);
    let mut report = Report::new();
    for i in 1..=n {
        let s = SignedPerm::simple_reflection(i, n).unwrap();
        let lhs = apply_rw_induced(&s, &psi);
        let root = AffineRoot::finite(simple_root(i, n).unwrap()).unwrap();
        let mut params = pj(p);
        params["i"] = json!(i);
        match apply_r_induced(&root, &psi, p) {
            Ok(rhs) => {
                let diff = lhs.first_difference(&rhs);
                report.push(Check::exact(
                    format!("r_s{i} Psi = R[a{i}] Psi (integrands)"),
                    params,
                    diff.is_none(),
                    || format!("component {}", diff.unwrap()),
                ));
            }
            Err(e) => report.push(Check::error(format!("r_s{i} Psi = R[a{i}] Psi"), params, e)),
        }
    }
    let pf = verify_partial_fractions(p);
    for c in pf
        .checks
        .into_iter()
        .filter(|c| c.identity.contains("delta-theta"))
    {
        report.push(c);
    }
    report
}
