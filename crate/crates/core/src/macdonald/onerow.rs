//! The one-row polynomial
//! `P_{(λ,0,…,0)} = (q)_λ/(t)_λ Σ_{i_1+⋯+i_{2n}=λ} Π_k (t)_{i_k}/(q)_{i_k}
//!   · Π_j y_j^{i_j − i_{2n+1−j}}`
//! and the eigen and triangularity checks on it.

use rayon::prelude::*;
use serde_json::json;

use super::operator::{apply_e, eigenvalue_c};
use super::sym::{format_weight, SymLaurent};
use super::MacdonaldError;
use crate::report::{Check, Report};
use crate::ring::{Ambient, LaurentPoly};
use crate::weyl::{dominance_less, orbit_sum};

/// `(a)_m = Π_{k<m} (1 − a q^k)`.
pub fn pochhammer(r: &Ambient, a: &LaurentPoly, m: u32) -> LaurentPoly {
    (0..m).fold(r.one(), |acc, k| &acc * &(&r.one() - &(a * &r.q().pow(k))))
}

/// Weak compositions of `total` into `parts` parts, colexicographic.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(total, parts, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// `(a)_m` as its list of factors `1 − a q^k`.
pub fn pochhammer_factors(r: &Ambient, a: &LaurentPoly, m: u32) -> Vec<LaurentPoly> {
    (0..m).map(|k| &r.one() - &(a * &r.q().pow(k))).collect()
}

/// `(t)_λ P` as a Laurent polynomial, with its scalar `(t)_λ`. With
/// `skip` set, that composition index (colex order) is left out.
pub fn onerow_numerator(n: usize, lambda: u32, skip: Option<usize>) -> (LaurentPoly, LaurentPoly) {
    let r = Ambient::new(n);
    let q_lambda = pochhammer(&r, &r.q(), lambda);
    let terms: Vec<LaurentPoly> = compositions(lambda, 2 * n)
        .into_par_iter()
        .enumerate()
        .filter(|(idx, _)| Some(*idx) != skip)
        .map(|(_, comp)| {
            let r = Ambient::new(n);
            let (mut tp, mut qp) = (r.one(), r.one());
            for &i in &comp {
                tp = &tp * &pochhammer(&r, &r.t(), i);
                qp = &qp * &pochhammer(&r, &r.q(), i);
            }
            let coeff = &q_lambda
                .div_exact(&qp)
                .expect("q-multinomial is polynomial")
                * &tp;
            let weight: Vec<i32> = (0..n)
                .map(|j| comp[j] as i32 - comp[2 * n - 1 - j] as i32)
                .collect();
            &coeff * &r.y_weight(&weight)
        })
        .collect();
    let num = terms.into_iter().fold(r.zero(), |acc, p| &acc + &p);
    (num, pochhammer(&r, &r.t(), lambda))
}

pub fn macdonald_onerow(n: usize, lambda: u32) -> Result<SymLaurent, MacdonaldError> {
    if lambda == 0 {
        return Err(MacdonaldError::ZeroLambda);
    }
    let (num, _) = onerow_numerator(n, lambda, None);
    let r = Ambient::new(n);
    SymLaurent::with_scalar_factors(num, pochhammer_factors(&r, &r.t(), lambda), true)
}

fn onerow_weight(n: usize, lambda: u32) -> Vec<i32> {
    let mut mu = vec![0; n];
    mu[0] = lambda as i32;
    mu
}

/// `E P = c_{(λ,0,…,0)} P`, checked on `(t)_λ P`. With `drop_term` one
/// composition is left out of `P`.
pub fn verify_eigen(n: usize, lambda: u32, drop_term: bool) -> Report {
    let params = json!({"n": n, "lambda": lambda, "drop_term": drop_term});
    let name = "E P = c P";
    if lambda == 0 {
        return [Check::error(name, params, MacdonaldError::ZeroLambda)]
            .into_iter()
            .collect();
    }
    let r = Ambient::new(n);
    let (num, _) = onerow_numerator(n, lambda, drop_term.then_some(0));
    let c = eigenvalue_c(&onerow_weight(n, lambda), n).expect("partition");
    let lhs = apply_e(&r.frac(num.clone()));
    let rhs = r.frac(&c * &num);
    let ok = lhs == rhs;
    [Check::exact(name, params, ok, || {
        format!("E P - c P = {}", &lhs - &rhs)
    })]
    .into_iter()
    .collect()
}

/// `P = m_{(λ,0,…,0)} + Σ_{ν<(λ,0,…,0)} a_ν m_ν`. With `add_higher` the
/// orbit sum `m_{(λ+1,0,…,0)}` is added first.
pub fn verify_triangularity(n: usize, lambda: u32, add_higher: bool) -> Report {
    let params = json!({"n": n, "lambda": lambda, "add_higher": add_higher});
    let mut report = Report::new();
    let p = match macdonald_onerow(n, lambda) {
        Ok(p) => p,
        Err(e) => {
            report.push(Check::error("P is W-invariant", params, e));
            return report;
        }
    };
    let p = if add_higher {
        let extra = &orbit_sum(&onerow_weight(n, lambda + 1), n).expect("partition") * &p.scalar();
        SymLaurent::with_scalar_factors(p.numerator() + &extra, p.scalar_factors().to_vec(), true)
            .expect("invariant")
    } else {
        p
    };
    let top = onerow_weight(n, lambda);
    let expansion = match p.m_expansion() {
        Ok(e) => e,
        Err(e) => {
            report.push(Check::error("P is W-invariant", params, e));
            return report;
        }
    };
    let r = Ambient::new(n);
    let lead = expansion
        .iter()
        .find(|(nu, _)| *nu == top)
        .map(|(_, c)| c.clone());
    report.push(Check::exact(
        format!("coefficient of m_{:?} is 1", top),
        params.clone(),
        lead.as_ref() == Some(&r.fone()),
        || format!("{lead:?}"),
    ));
    for (nu, _) in expansion.iter().filter(|(nu, _)| *nu != top) {
        let ok = dominance_less(nu, &top).unwrap_or(false);
        let mut params = params.clone();
        params["nu"] = json!(nu);
        report.push(Check::exact(
            format!("m_{nu:?} lies below m_{top:?}"),
            params,
            ok,
            || format!("{} is not dominated", format_weight(nu)),
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, Gen, RatFunc, Substitution};

    #[test]
    fn colex_order() {
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(3, 4).len(), 20);
        assert_eq!(
            compositions(1, 3),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
    }

    #[test]
    fn degree_one_is_orbit_sum() {
        let p = macdonald_onerow(2, 1).unwrap();
        let exp = p.m_expansion().unwrap();
        assert_eq!(exp.len(), 1);
        assert_eq!(exp[0].0, vec![1, 0]);
        assert_eq!(
            p.to_ratfunc(),
            RatFunc::from_poly(orbit_sum(&[1, 0], 2).unwrap())
        );
    }

    #[test]
    fn rank_two_degree_two_expansion() {
        let r = Ambient::new(2);
        let exp = macdonald_onerow(2, 2).unwrap().m_expansion().unwrap();
        let support: Vec<Vec<i32>> = exp.iter().map(|(nu, _)| nu.clone()).collect();
        assert_eq!(support, vec![vec![2, 0], vec![1, 1], vec![0, 0]]);
        // (1−t)(1+q)/(1−qt), fixed by the eigen equation
        let num = &(&r.one() - &r.t()) * &(&r.one() + &r.q());
        let ratio = RatFunc::new(num, &r.one() - &(&r.q() * &r.t())).unwrap();
        assert_eq!(exp[1].1, ratio);
        assert_eq!(exp[2].1, ratio.scale(&int(2)));
    }

    #[test]
    fn t_equals_q_gives_plain_sum() {
        for (n, lambda) in [(1, 3), (2, 2)] {
            let r = Ambient::new(n);
            let p = macdonald_onerow(n, lambda).unwrap().to_ratfunc();
            let sub = Substitution::identity(n).with(Gen::U, int(1), r.exps(&[(Gen::V, 1)]));
            let want = compositions(lambda, 2 * n).iter().fold(r.zero(), |acc, c| {
                let w: Vec<i32> = (0..n)
                    .map(|j| c[j] as i32 - c[2 * n - 1 - j] as i32)
                    .collect();
                &acc + &r.y_weight(&w)
            });
            assert_eq!(p.substitute(&sub).unwrap(), r.frac(want));
        }
    }

    #[test]
    fn eigen_small() {
        for (n, lambda) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)] {
            assert!(
                verify_eigen(n, lambda, false).passed(),
                "n={n} lambda={lambda}"
            );
        }
        assert!(!verify_eigen(2, 2, true).passed());
    }

    #[test]
    fn triangularity_small() {
        assert!(verify_triangularity(2, 2, false).passed());
        assert!(verify_triangularity(3, 2, false).passed());
        assert!(!verify_triangularity(2, 2, true).passed());
        assert_eq!(verify_triangularity(2, 1, false).len(), 1);
    }
}
