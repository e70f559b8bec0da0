//! Lusztig operators `T_i = t + (1 − t e^{α_i})/(1 − e^{α_i}) (s_i − 1)` and
//! the Hecke algebra they generate on the `φ`-span.

use rayon::prelude::*;
use serde_json::json;

use super::phi::{common_denominator, phi, PhiBasis};
use super::HeckeError;
use crate::report::{Check, Report};
use crate::ring::{int, Ambient, ExponentVector, Gen, RatFunc, Substitution};
use crate::weyl::{act_on_ratfunc, SignedPerm};

/// `e^{α_i}`: `y_i/y_{i+1}` for `i < n`, `y_n^2` for `i = n`.
fn e_alpha(r: &Ambient, i: usize) -> crate::ring::LaurentPoly {
    let n = r.rank();
    if i < n {
        r.mono(&[(Gen::Y(i), 1), (Gen::Y(i + 1), -1)])
    } else {
        r.mono(&[(Gen::Y(n), 2)])
    }
}

/// `T_i f`. With `shift_t` the leading constant is `t + 1` instead of `t`
/// (a deliberately wrong operator used to check that the suite can fail).
pub fn lusztig_t_with(i: usize, f: &RatFunc, shift_t: bool) -> Result<RatFunc, HeckeError> {
    let n = f.rank();
    if i == 0 || i > n {
        return Err(HeckeError::IndexOutOfRange { i, n });
    }
    let r = Ambient::new(n);
    let s = SignedPerm::simple_reflection(i, n).expect("checked");
    let sf = act_on_ratfunc(&s, f).expect("rank");
    let e = e_alpha(&r, i);
    let ratio = RatFunc::new(&r.one() - &(&r.t() * &e), &r.one() - &e).expect("nonzero");
    let lead = if shift_t { &r.t() + &r.one() } else { r.t() };
    Ok(&f.mul_poly(&lead) + &(&ratio * &(&sf - f)))
}

pub fn lusztig_t(i: usize, f: &RatFunc) -> Result<RatFunc, HeckeError> {
    lusztig_t_with(i, f, false)
}

/// Coordinates of `f` in the `φ` basis over `ℚ(q^{1/2}, t^{1/2})`.
///
/// Multiplying by the common denominator `D` clears every pole in `x`; the
/// specializations `x ↦ t y_j^{-1}` (`j ≤ n`) and `x ↦ t y_{2n−j+1}`
/// (`j > n`) then make `[(Dφ_k)(r_j)]` upper triangular.
pub fn phi_coordinates(basis: &PhiBasis, f: &RatFunc) -> Result<Vec<RatFunc>, HeckeError> {
    let n = basis.rank();
    let r = Ambient::new(n);
    let d = common_denominator(n);
    let at = |j: usize| -> Substitution {
        let (mu, sign) = if j <= n { (j, -1) } else { (2 * n - j + 1, 1) };
        let mut e = ExponentVector::zero(n + 3);
        e.set(Gen::U.index(n), 2);
        e.set(Gen::Y(mu).index(n), sign);
        Substitution::identity(n).with(Gen::X, int(1), e)
    };
    let outside = |why: &str| HeckeError::OutsideSpan(format!("{why}: {f}"));
    let g = f.mul_poly(&d);
    let cols: Vec<RatFunc> = basis.entries().iter().map(|p| p.mul_poly(&d)).collect();
    let mut coords = vec![r.fzero(); 2 * n];
    for j in (1..=2 * n).rev() {
        let sub = at(j);
        let mut rhs = g
            .substitute(&sub)
            .map_err(|_| outside("pole at a specialization"))?;
        for k in j + 1..=2 * n {
            if !coords[k - 1].is_zero() {
                let m = cols[k - 1].substitute(&sub).expect("polynomial");
                rhs = &rhs - &(&m * &coords[k - 1]);
            }
        }
        let diag = cols[j - 1].substitute(&sub).expect("polynomial");
        coords[j - 1] = (&rhs / &diag).reduced();
    }
    let recombined = basis
        .entries()
        .iter()
        .zip(&coords)
        .fold(r.fzero(), |acc, (p, c)| &acc + &(c * p));
    if recombined != *f {
        return Err(outside("not a combination of the basis"));
    }
    for c in &coords {
        for j in 1..=n {
            if !c.is_free_of(Gen::Y(j).index(n)) {
                let doubled =
                    Substitution::identity(n).with(Gen::Y(j), int(2), r.exps(&[(Gen::Y(j), 1)]));
                if !c.is_invariant_under(&doubled).unwrap_or(false) {
                    return Err(outside("coefficient depends on y"));
                }
            }
        }
    }
    Ok(coords)
}

/// A `2n × 2n` matrix over `ℚ(q^{1/2}, t^{1/2})`; column `k` holds the
/// coordinates of the image of `φ_{w_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeMatrix {
    cols: Vec<Vec<RatFunc>>,
}

impl HeckeMatrix {
    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    /// Row `j`, column `k`, both 1-based.
    pub fn entry(&self, j: usize, k: usize) -> &RatFunc {
        &self.cols[k - 1][j - 1]
    }

    pub fn identity(n: usize) -> Self {
        let r = Ambient::new(n);
        let cols = (0..2 * n)
            .map(|k| {
                (0..2 * n)
                    .map(|j| if j == k { r.fone() } else { r.fzero() })
                    .collect()
            })
            .collect();
        HeckeMatrix { cols }
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let dim = self.dim();
        let nvars = self.cols[0][0].nvars();
        let cols = other
            .cols
            .iter()
            .map(|col| {
                (0..dim)
                    .map(|j| {
                        col.iter()
                            .enumerate()
                            .fold(RatFunc::zero(nvars), |acc, (k, c)| {
                                if c.is_zero() || self.cols[k][j].is_zero() {
                                    acc
                                } else {
                                    &acc + &(&self.cols[k][j] * c)
                                }
                            })
                    })
                    .collect()
            })
            .collect();
        HeckeMatrix { cols }
    }

    pub fn add_scaled_identity(&self, c: &RatFunc) -> Self {
        let mut out = self.clone();
        for (k, col) in out.cols.iter_mut().enumerate() {
            col[k] = &col[k] + c;
        }
        out
    }

    /// The first `(row, column)` where the matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        for (k, (a, b)) in self.cols.iter().zip(&other.cols).enumerate() {
            for (j, (x, y)) in a.iter().zip(b).enumerate() {
                if x != y {
                    return Some((j + 1, k + 1));
                }
            }
        }
        None
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().flatten().all(RatFunc::is_zero)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        let dim = self.dim();
        (1..=dim)
            .map(|j| (1..=dim).map(|k| self.entry(j, k).to_string()).collect())
            .collect()
    }
}

/// Matrix of `T_i` on the `φ`-span, failing if some image leaves it.
pub fn hecke_matrix(basis: &PhiBasis, i: usize, shift_t: bool) -> Result<HeckeMatrix, HeckeError> {
    let cols = basis
        .entries()
        .par_iter()
        .map(|p| phi_coordinates(basis, &lusztig_t_with(i, p, shift_t)?))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HeckeMatrix { cols })
}

fn word(mats: &[HeckeMatrix], w: &[usize]) -> HeckeMatrix {
    let n = mats.len();
    w.iter()
        .fold(HeckeMatrix::identity(n), |acc, &i| acc.mul(&mats[i - 1]))
}

fn relation(
    report: &mut Report,
    name: String,
    params: serde_json::Value,
    lhs: HeckeMatrix,
    rhs: HeckeMatrix,
) {
    let diff = lhs.first_difference(&rhs);
    report.push(Check::exact(name, params, diff.is_none(), || {
        let (j, k) = diff.unwrap();
        format!(
            "entry ({j},{k}): {} vs {}",
            lhs.entry(j, k),
            rhs.entry(j, k)
        )
    }));
}

/// Quadratic, braid and commutation relations on the `φ`-span.
///
/// Commutation is reported separately for `|i−j| > 2` and for `|i−j| = 2`
/// (the latter being what a Coxeter presentation needs).
pub fn verify_hecke_relations(n: usize, shift_t: bool) -> Report {
    let basis = phi(n);
    let r = Ambient::new(n);
    let mut report = Report::new();
    let base = json!({"n": n, "shift_t": shift_t});
    let mut mats = Vec::with_capacity(n);
    for i in 1..=n {
        match hecke_matrix(&basis, i, shift_t) {
            Ok(m) => {
                let mut params = base.clone();
                params["i"] = json!(i);
                report.push(Check::exact(
                    format!("T{i} preserves the phi span"),
                    params,
                    true,
                    String::new,
                ));
                mats.push(m);
            }
            Err(e) => {
                let mut params = base.clone();
                params["i"] = json!(i);
                report.push(Check::error(
                    format!("T{i} preserves the phi span"),
                    params,
                    e,
                ));
                return report;
            }
        }
    }
    let t = r.frac(r.t());
    for i in 1..=n {
        let m = &mats[i - 1];
        let lhs = m
            .add_scaled_identity(&-&t)
            .mul(&m.add_scaled_identity(&r.fone()));
        let mut params = base.clone();
        params["i"] = json!(i);
        let ok = lhs.is_zero();
        report.push(Check::exact(
            format!("(T{i}-t)(T{i}+1) = 0"),
            params.clone(),
            ok,
            || {
                let (j, k) = lhs
                    .first_difference(&HeckeMatrix {
                        cols: vec![vec![r.fzero(); 2 * n]; 2 * n],
                    })
                    .unwrap();
                format!("entry ({j},{k}) = {}", lhs.entry(j, k))
            },
        ));
        // the same relation directly on the functions
        for (k, p) in basis.entries().iter().enumerate() {
            let direct = (|| -> Result<bool, HeckeError> {
                let tp = lusztig_t_with(i, p, shift_t)?;
                let ttp = lusztig_t_with(i, &tp, shift_t)?;
                let val = &(&ttp - &tp.mul_poly(&(&r.t() - &r.one()))) - &p.mul_poly(&r.t());
                Ok(val.is_zero())
            })();
            let mut params = params.clone();
            params["k"] = json!(k + 1);
            match direct {
                Ok(ok) => report.push(Check::exact(
                    format!("(T{i}-t)(T{i}+1) phi_{} = 0", k + 1),
                    params,
                    ok,
                    || "nonzero".into(),
                )),
                Err(e) => report.push(Check::error(
                    format!("(T{i}-t)(T{i}+1) phi_{}", k + 1),
                    params,
                    e,
                )),
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        let mut params = base.clone();
        params["i"] = json!(i);
        relation(
            &mut report,
            format!("T{i}T{}T{i} = T{}T{i}T{}", i + 1, i + 1, i + 1),
            params,
            word(&mats, &[i, i + 1, i]),
            word(&mats, &[i + 1, i, i + 1]),
        );
    }
    if n >= 2 {
        relation(
            &mut report,
            format!("T{m}T{n}T{m}T{n} = T{n}T{m}T{n}T{m}", m = n - 1),
            base.clone(),
            word(&mats, &[n - 1, n, n - 1, n]),
            word(&mats, &[n, n - 1, n, n - 1]),
        );
    }
    for i in 1..=n {
        for j in i + 2..=n {
            let range = if j - i > 2 { "|i-j|>2" } else { "|i-j|=2" };
            let mut params = base.clone();
            params["i"] = json!(i);
            params["j"] = json!(j);
            params["range"] = json!(range);
            relation(
                &mut report,
                format!("T{i}T{j} = T{j}T{i} ({range})"),
                params,
                word(&mats, &[i, j]),
                word(&mats, &[j, i]),
            );
        }
    }
    report
}

/// The expected image `T_i φ_{w_k}` as a combination `[(coefficient, index)]`.
pub fn lusztig_image(n: usize, i: usize, k: usize) -> Vec<(RatFunc, usize)> {
    let r = Ambient::new(n);
    let t = r.frac(r.t());
    let tm1 = r.frac(&r.t() - &r.one());
    if k <= n {
        if i + 1 == k {
            vec![(tm1, k), (r.fone(), k - 1)]
        } else if i == k {
            vec![(t, k + 1)]
        } else {
            vec![(t, k)]
        }
    } else {
        let kk = k - n;
        if i == n - kk + 1 {
            vec![(tm1, k), (r.fone(), k - 1)]
        } else if i + kk == n {
            vec![(t, k + 1)]
        } else {
            vec![(t, k)]
        }
    }
}

/// Every `T_i φ_{w_k}` against the case table, `1 ≤ i ≤ n`, `1 ≤ k ≤ 2n`.
pub fn verify_lusztig_table(n: usize, shift_t: bool) -> Report {
    let basis = phi(n);
    let r = Ambient::new(n);
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=2 * n).map(move |k| (i, k)))
        .collect();
    pairs
        .par_iter()
        .map(|&(i, k)| {
            let params = json!({"n": n, "i": i, "k": k, "shift_t": shift_t});
            let want = lusztig_image(n, i, k)
                .into_iter()
                .fold(r.fzero(), |acc, (c, idx)| &acc + &(&c * basis.get(idx)));
            let name = format!("T{i} phi_{k}");
            match lusztig_t_with(i, basis.get(k), shift_t) {
                Ok(got) => {
                    let ok = got == want;
                    Check::exact(name, params, ok, || format!("got {got}, expected {want}"))
                }
                Err(e) => Check::error(name, params, e),
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_goes_to_t() {
        let r = Ambient::new(2);
        for i in 1..=2 {
            assert_eq!(lusztig_t(i, &r.fone()).unwrap(), r.frac(r.t()));
        }
    }

    #[test]
    fn rank_two_examples() {
        let r = Ambient::new(2);
        let b = phi(2);
        let t = r.frac(r.t());
        assert_eq!(lusztig_t(1, b.get(1)).unwrap(), &t * b.get(2));
        let want = &(&r.frac(&r.t() - &r.one()) * b.get(2)) + b.get(1);
        assert_eq!(lusztig_t(1, b.get(2)).unwrap(), want);
    }

    #[test]
    fn coordinates_of_basis_vectors() {
        let b = phi(2);
        let r = Ambient::new(2);
        for k in 1..=4 {
            let c = phi_coordinates(&b, b.get(k)).unwrap();
            for (j, cj) in c.iter().enumerate() {
                let want = if j + 1 == k { r.fone() } else { r.fzero() };
                assert_eq!(*cj, want);
            }
        }
    }

    #[test]
    fn y_outside_span() {
        let b = phi(1);
        let r = Ambient::new(1);
        let f = b.get(1).mul_poly(&r.gen(Gen::Y(1)));
        assert!(phi_coordinates(&b, &f).is_err());
    }

    #[test]
    fn relations_small() {
        for n in 1..=3 {
            for rep in [
                verify_hecke_relations(n, false),
                verify_lusztig_table(n, false),
            ] {
                assert!(rep.passed(), "n={n} {:?}", rep.failures().next());
            }
        }
    }

    #[test]
    fn shifted_operator_fails() {
        assert!(!verify_hecke_relations(2, true).passed());
        assert!(!verify_lusztig_table(2, true).passed());
    }
}
