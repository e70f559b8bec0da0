//! The full module `V = ⊕_{w ∈ W} A h_w` and the R-matrix and `r_w` actions
//! on it.

use std::collections::BTreeMap;

use super::coeffs::{r_coeffs, QkzParams};
use crate::ring::{Ambient, RatFunc};
use crate::weyl::{
    act_on_ratfunc, coroot_pairing, epsilon, is_positive, reflection, AffineRoot, SignedPerm,
};

/// `Σ f_w h_w` with zero coefficients pruned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullVec {
    n: usize,
    entries: BTreeMap<SignedPerm, RatFunc>,
}

impl FullVec {
    pub fn zero(n: usize) -> Self {
        FullVec {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// `f · h_w`.
    pub fn basis(w: SignedPerm, f: RatFunc) -> Self {
        let n = w.rank();
        let mut out = FullVec::zero(n);
        out.add_term(w, f);
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> impl Iterator<Item = (&SignedPerm, &RatFunc)> {
        self.entries.iter()
    }

    pub fn coeff(&self, w: &SignedPerm) -> RatFunc {
        self.entries
            .get(w)
            .cloned()
            .unwrap_or_else(|| Ambient::new(self.n).fzero())
    }

    pub fn add_term(&mut self, w: SignedPerm, f: RatFunc) {
        if f.is_zero() {
            return;
        }
        match self.entries.remove(&w) {
            Some(old) => {
                let s = &old + &f;
                if !s.is_zero() {
                    self.entries.insert(w, s);
                }
            }
            None => {
                self.entries.insert(w, f);
            }
        }
    }

    /// Componentwise equality up to `frac_equal`.
    pub fn frac_equal(&self, other: &Self) -> bool {
        let keys: std::collections::BTreeSet<&SignedPerm> =
            self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter()
            .all(|w| self.coeff(w).frac_equal(&other.coeff(w)))
    }

    /// The first basis element where the two vectors differ.
    pub fn first_difference(&self, other: &Self) -> Option<SignedPerm> {
        let keys: std::collections::BTreeSet<&SignedPerm> =
            self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter()
            .find(|w| !self.coeff(w).frac_equal(&other.coeff(w)))
            .cloned()
    }
}

/// Exponent of `q` in `q^{m ⟨α^∨, y u⟩}` with `u = −λ ε_1`.
pub fn q_exponent(root: &AffineRoot, y: &SignedPerm, lambda: u32) -> i32 {
    let n = y.rank();
    let yu: Vec<i32> = y
        .apply(&epsilon(1, n))
        .expect("rank")
        .iter()
        .map(|c| -(lambda as i32) * c)
        .collect();
    root.m * coroot_pairing(&yu, &root.root)
}

/// `R_{α+mδ} h_y = a h_y + q^{m⟨α^∨,yu⟩} b h_{s_α y}` if `y^{-1}(α) > 0`,
/// else `c h_y + q^{m⟨α^∨,yu⟩} d h_{s_α y}`; extended A-linearly.
pub fn apply_r_full(root: &AffineRoot, f: &FullVec, params: &QkzParams) -> FullVec {
    let rc = r_coeffs(root, params);
    let r = params.ambient();
    let s_alpha = reflection(&root.root).expect("valid root");
    let mut out = FullVec::zero(f.n);
    for (y, coeff) in &f.entries {
        let back = y.inverse().apply(&root.root).expect("rank");
        let (c1, c2) = if is_positive(&back) {
            (&rc.a, &rc.b)
        } else {
            (&rc.c, &rc.d)
        };
        out.add_term(y.clone(), coeff * c1);
        let k = q_exponent(root, y, params.lambda);
        let target = s_alpha.compose(y).expect("rank");
        out.add_term(target, (coeff * c2).mul_poly(&r.q_pow(k)));
    }
    out
}

/// `r_w (f h_y) = w(f) h_{wy}`.
pub fn apply_rw(w: &SignedPerm, f: &FullVec) -> FullVec {
    let mut out = FullVec::zero(f.n);
    for (y, coeff) in &f.entries {
        let g = act_on_ratfunc(w, coeff).expect("rank");
        out.add_term(w.compose(y).expect("rank"), g);
    }
    out
}

/// Applies `R_{β_1} R_{β_2} ⋯ R_{β_k}` (rightmost first).
pub fn apply_product_full(roots: &[AffineRoot], f: &FullVec, params: &QkzParams) -> FullVec {
    roots
        .iter()
        .rev()
        .fold(f.clone(), |acc, root| apply_r_full(root, &acc, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Gen;
    use crate::weyl::simple_root;

    #[test]
    fn simple_root_cases() {
        let p = QkzParams::new(2, 1);
        let r = p.ambient();
        let a1 = AffineRoot::finite(simple_root(1, 2).unwrap()).unwrap();
        let rc = r_coeffs(&a1, &p);
        let e = SignedPerm::identity(2);
        let s1 = SignedPerm::simple_reflection(1, 2).unwrap();
        let out = apply_r_full(&a1, &FullVec::basis(e.clone(), r.fone()), &p);
        assert_eq!(out.coeff(&e), rc.a);
        assert_eq!(out.coeff(&s1), rc.b);
        let out = apply_r_full(&a1, &FullVec::basis(s1.clone(), r.fone()), &p);
        assert_eq!(out.coeff(&s1), rc.c);
        assert_eq!(out.coeff(&e), rc.d);
    }

    #[test]
    fn rw_examples() {
        let r = crate::ring::Ambient::new(2);
        let e = SignedPerm::identity(2);
        let s1 = SignedPerm::simple_reflection(1, 2).unwrap();
        let y1 = RatFunc::from_poly(r.gen(Gen::Y(1)));
        let out = apply_rw(&s1, &FullVec::basis(e.clone(), y1.clone()));
        let want = FullVec::basis(s1.clone(), RatFunc::from_poly(r.gen(Gen::Y(2))));
        assert!(out.frac_equal(&want));
        let v = FullVec::basis(s1, y1);
        assert!(apply_rw(&e, &v).frac_equal(&v));
    }
}
