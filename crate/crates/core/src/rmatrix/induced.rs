//! The `2n`-dimensional induced module spanned by the coset sums
//! `h̄_{w_k} = Σ_{g ∈ W_{ε_1}} h_{w_k g}`, and the QKZ transport operators
//! restricted to it.

use num_complex::Complex64;
use serde::Serialize;

use super::coeffs::{r_coeffs, QkzParams};
use super::full::{apply_r_full, FullVec};
use super::RmatrixError;
use crate::ring::{Assignment, RatFunc, RingError};
use crate::weyl::{coset_index, simple_root, AffineRoot, SignedPerm};

/// Coefficients on `h̄_{w_1}, …, h̄_{w_{2n}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedVec {
    entries: Vec<RatFunc>,
}

impl InducedVec {
    pub fn new(entries: Vec<RatFunc>) -> Self {
        assert!(
            !entries.is_empty() && entries.len().is_multiple_of(2),
            "length must be 2n"
        );
        InducedVec { entries }
    }

    pub fn zero(params: &QkzParams) -> Self {
        let r = params.ambient();
        InducedVec {
            entries: vec![r.fzero(); 2 * params.n],
        }
    }

    /// The unit vector `h̄_{w_k}` (1-based).
    pub fn unit(k: usize, params: &QkzParams) -> Self {
        let mut v = Self::zero(params);
        v.entries[k - 1] = params.ambient().fone();
        v
    }

    pub fn rank(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    /// Entry for `h̄_{w_k}` (1-based).
    pub fn get(&self, k: usize) -> &RatFunc {
        &self.entries[k - 1]
    }

    pub fn frac_equal(&self, other: &Self) -> bool {
        self.entries.len() == other.entries.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.frac_equal(b))
    }

    /// First 1-based index where the vectors differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| !a.frac_equal(b))
            .map(|i| i + 1)
    }
}

/// `Σ_k v_k h̄_{w_k}` as a vector of the full module.
pub fn embed(v: &InducedVec) -> FullVec {
    let n = v.rank();
    let mut out = FullVec::zero(n);
    for w in SignedPerm::enumerate(n) {
        let k = coset_index(&w);
        out.add_term(w, v.get(k).clone());
    }
    out
}

/// Inverse of [`embed`]; checks that coefficients are constant on cosets.
pub fn extract(f: &FullVec, root: &AffineRoot) -> Result<InducedVec, RmatrixError> {
    let n = f.rank();
    let mut slots: Vec<Option<RatFunc>> = vec![None; 2 * n];
    for w in SignedPerm::enumerate(n) {
        let k = coset_index(&w);
        let c = f.coeff(&w);
        match &slots[k - 1] {
            None => slots[k - 1] = Some(c),
            Some(prev) => {
                if !prev.frac_equal(&c) {
                    return Err(RmatrixError::LeavesInducedSpan {
                        root: root.to_string(),
                        coset: k,
                    });
                }
            }
        }
    }
    Ok(InducedVec {
        entries: slots.into_iter().map(|s| s.unwrap()).collect(),
    })
}

/// `R_{α+mδ}` on the induced module through the full module.
pub fn apply_r_induced_via_full(
    root: &AffineRoot,
    v: &InducedVec,
    params: &QkzParams,
) -> Result<InducedVec, RmatrixError> {
    extract(&apply_r_full(root, &embed(v), params), root)
}

/// Two-dimensional block action `h̄_p ↦ a h̄_p + βb h̄_{p'}`,
/// `h̄_{p'} ↦ c h̄_{p'} + γd h̄_p`, identity elsewhere.
fn mix(
    v: &InducedVec,
    p: usize,
    p2: usize,
    rc: &super::coeffs::RCoeffs,
    scale_b: &RatFunc,
    scale_d: &RatFunc,
    out: &mut [RatFunc],
) {
    let x = v.get(p);
    let y = v.get(p2);
    out[p - 1] = &(&rc.a * x) + &(&(&rc.d * scale_d) * y);
    out[p2 - 1] = &(&rc.c * y) + &(&(&rc.b * scale_b) * x);
}

/// `R_{α+mδ}` on the induced module. Simple roots and `δ−θ` use the closed
/// two-term formulas; every other root goes through the full module.
pub fn apply_r_induced(
    root: &AffineRoot,
    v: &InducedVec,
    params: &QkzParams,
) -> Result<InducedVec, RmatrixError> {
    let n = params.n;
    let r = params.ambient();
    let one = r.fone();
    let simple = if root.m == 0 {
        (1..=n).find(|&i| simple_root(i, n).unwrap() == root.root)
    } else {
        None
    };
    let mut neg_theta = vec![0; n];
    neg_theta[0] = -2;
    if let Some(i) = simple {
        let rc = r_coeffs(root, params);
        let mut out = v.entries.clone();
        if i < n {
            mix(v, i, i + 1, &rc, &one, &one, &mut out);
            mix(v, 2 * n - i, 2 * n - i + 1, &rc, &one, &one, &mut out);
        } else {
            mix(v, n, n + 1, &rc, &one, &one, &mut out);
        }
        return Ok(InducedVec { entries: out });
    }
    if root.m == 1 && root.root == neg_theta {
        let rc = r_coeffs(root, params);
        let lam = params.lambda as i32;
        let mut out = v.entries.clone();
        let qm = RatFunc::from_poly(r.q_pow(-lam));
        let qp = RatFunc::from_poly(r.q_pow(lam));
        mix(v, 2 * n, 1, &rc, &qm, &qp, &mut out);
        return Ok(InducedVec { entries: out });
    }
    apply_r_induced_via_full(root, v, params)
}

/// A translation selector for the QKZ transport operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Translation {
    /// `τ(ε_i)`, 1-based.
    Eps(usize),
    /// `τ(½(ε_1+⋯+ε_n))`.
    HalfSum,
}

impl std::fmt::Display for Translation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Translation::Eps(i) => write!(f, "tau(e{i})"),
            Translation::HalfSum => write!(f, "tau(half-sum)"),
        }
    }
}

fn aroot(n: usize, terms: &[(i32, usize)], m: i32) -> AffineRoot {
    AffineRoot::new(crate::weyl::roots::combo(n, terms), m).expect("valid root")
}

/// The factors of `R_{τ(ε_i)}` in displayed (left-to-right) order:
/// `R_{ε_i−ε_{i−1}+δ} ⋯ R_{ε_i−ε_1+δ} R_{2ε_i+δ} R_{ε_1+ε_i} ⋯ R_{ε_{i−1}+ε_i}
///  R_{ε_i+ε_{i+1}} ⋯ R_{ε_i+ε_n} R_{2ε_i} R_{ε_i−ε_n} ⋯ R_{ε_i−ε_{i+1}}`.
pub fn transport_roots(sel: Translation, n: usize) -> Vec<AffineRoot> {
    let mut out = Vec::new();
    match sel {
        Translation::Eps(i) => {
            for j in (1..i).rev() {
                out.push(aroot(n, &[(1, i), (-1, j)], 1));
            }
            out.push(aroot(n, &[(2, i)], 1));
            for j in 1..i {
                out.push(aroot(n, &[(1, j), (1, i)], 0));
            }
            for j in i + 1..=n {
                out.push(aroot(n, &[(1, i), (1, j)], 0));
            }
            out.push(aroot(n, &[(2, i)], 0));
            for j in (i + 1..=n).rev() {
                out.push(aroot(n, &[(1, i), (-1, j)], 0));
            }
        }
        Translation::HalfSum => {
            for k in 1..=n {
                out.push(aroot(n, &[(2, k)], 0));
                for j in k + 1..=n {
                    out.push(aroot(n, &[(1, k), (1, j)], 0));
                }
            }
        }
    }
    out
}

/// Applies `R_{β_1} ⋯ R_{β_k}` on the induced module (rightmost first).
pub fn apply_product_induced(
    roots: &[AffineRoot],
    v: &InducedVec,
    params: &QkzParams,
) -> Result<InducedVec, RmatrixError> {
    let mut acc = v.clone();
    for root in roots.iter().rev() {
        acc = apply_r_induced(root, &acc, params)?;
    }
    Ok(acc)
}

/// A `2n × 2n` matrix over the rational functions; column `k` is the image of
/// `h̄_{w_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMatrix {
    rows: Vec<Vec<RatFunc>>,
}

impl InducedMatrix {
    pub fn from_columns(cols: Vec<InducedVec>) -> Self {
        let dim = cols.len();
        let rows = (0..dim)
            .map(|i| cols.iter().map(|c| c.entries[i].clone()).collect())
            .collect();
        InducedMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &RatFunc {
        &self.rows[row][col]
    }

    pub fn apply(&self, v: &InducedVec) -> InducedVec {
        let entries = self
            .rows
            .iter()
            .map(|row| {
                row.iter().zip(v.entries()).fold(
                    v.entries()[0].clone() - v.entries()[0].clone(),
                    |acc, (m, x)| &acc + &(m * x),
                )
            })
            .collect();
        InducedVec { entries }
    }

    pub fn eval(&self, at: &Assignment) -> Result<Vec<Vec<Complex64>>, RingError> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|f| f.eval(at)).collect())
            .collect()
    }

    /// Array-of-arrays of canonical strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|f| f.to_string()).collect())
            .collect()
    }
}

/// The transport operator `R_{τ(·)}` as a matrix on the induced basis.
pub fn qkz_transport(sel: Translation, params: &QkzParams) -> Result<InducedMatrix, RmatrixError> {
    let roots = transport_roots(sel, params.n);
    let cols = (1..=2 * params.n)
        .map(|k| apply_product_induced(&roots, &InducedVec::unit(k, params), params))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(InducedMatrix::from_columns(cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transport_words() {
        let show = |sel, n| {
            transport_roots(sel, n)
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(show(Translation::Eps(1), 1), vec!["2e1+d", "2e1"]);
        assert_eq!(show(Translation::HalfSum, 1), vec!["2e1"]);
        assert_eq!(
            show(Translation::Eps(1), 2),
            vec!["2e1+d", "e1+e2", "2e1", "e1-e2"]
        );
        assert_eq!(
            show(Translation::Eps(2), 2),
            vec!["-e1+e2+d", "2e2+d", "e1+e2", "2e2"]
        );
        assert_eq!(show(Translation::HalfSum, 2), vec!["2e1", "e1+e2", "2e2"]);
    }

    #[test]
    fn simple_root_lemma_cases() {
        let p = QkzParams::new(2, 1);
        let a1 = AffineRoot::finite(simple_root(1, 2).unwrap()).unwrap();
        let rc = r_coeffs(&a1, &p);
        let out = apply_r_induced(&a1, &InducedVec::unit(1, &p), &p).unwrap();
        assert_eq!(out.get(1), &rc.a);
        assert_eq!(out.get(2), &rc.b);
        assert!(out.get(3).is_zero() && out.get(4).is_zero());
        let p3 = QkzParams::new(3, 1);
        let a1 = AffineRoot::finite(simple_root(1, 3).unwrap()).unwrap();
        let e3 = InducedVec::unit(3, &p3);
        assert!(apply_r_induced(&a1, &e3, &p3).unwrap().frac_equal(&e3));
    }

    #[test]
    fn closed_forms_match_full_module() {
        for n in 1..=3 {
            for lambda in [1, 2] {
                let p = QkzParams::new(n, lambda);
                let mut roots: Vec<AffineRoot> = (1..=n)
                    .map(|i| AffineRoot::finite(simple_root(i, n).unwrap()).unwrap())
                    .collect();
                let mut nt = vec![0; n];
                nt[0] = -2;
                roots.push(AffineRoot::new(nt, 1).unwrap());
                for root in &roots {
                    for k in 1..=2 * n {
                        let v = InducedVec::unit(k, &p);
                        let fast = apply_r_induced(root, &v, &p).unwrap();
                        let slow = apply_r_induced_via_full(root, &v, &p).unwrap();
                        assert!(fast.frac_equal(&slow), "n={n} root={root} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn delta_minus_theta_on_first() {
        let p = QkzParams::new(2, 2);
        let r = p.ambient();
        let root = AffineRoot::new(vec![-2, 0], 1).unwrap();
        let rc = r_coeffs(&root, &p);
        let out = apply_r_induced(&root, &InducedVec::unit(1, &p), &p).unwrap();
        assert_eq!(out.get(1), &rc.c);
        assert_eq!(out.get(4), &rc.d.mul_poly(&r.q_pow(2)));
    }
}
