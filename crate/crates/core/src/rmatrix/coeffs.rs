//! Parameters and the four R-matrix coefficients `a, b, c, d`.

use serde::Serialize;

use crate::ring::{Ambient, Gen, LaurentPoly, RatFunc};
use crate::weyl::AffineRoot;

/// Which monomial plays the role of `t_α` for one root length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TParam {
    /// `t = u^2`.
    T,
    /// `q = v^2`; used only to run the two-parameter experiment with an
    /// independent symbol for the long roots.
    Q,
}

impl TParam {
    pub fn poly(self, r: &Ambient) -> LaurentPoly {
        match self {
            TParam::T => r.t(),
            TParam::Q => r.q(),
        }
    }
}

/// Deliberate coefficient corruption for self-tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Perturbation {
    None,
    /// `d ↦ d + 1`.
    DPlusOne,
    /// `d ↦ d + y_1`; unlike `d + 1` this breaks W-equivariance.
    DPlusY1,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QkzParams {
    pub n: usize,
    pub lambda: u32,
    /// `t_α` for `±ε_i±ε_j`.
    pub t_short: TParam,
    /// `t_α` for `±2ε_i`.
    pub t_long: TParam,
    pub perturbation: Perturbation,
}

impl QkzParams {
    pub fn new(n: usize, lambda: u32) -> Self {
        assert!(n >= 1 && lambda >= 1, "need n >= 1 and lambda >= 1");
        QkzParams {
            n,
            lambda,
            t_short: TParam::T,
            t_long: TParam::T,
            perturbation: Perturbation::None,
        }
    }

    pub fn with_perturbation(mut self, p: Perturbation) -> Self {
        self.perturbation = p;
        self
    }

    pub fn with_t_long(mut self, t: TParam) -> Self {
        self.t_long = t;
        self
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::new(self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RCoeffs {
    pub a: RatFunc,
    pub b: RatFunc,
    pub c: RatFunc,
    pub d: RatFunc,
}

/// `e^{α+mδ} = q^m y^α`.
pub fn exp_affine_root(root: &AffineRoot, r: &Ambient) -> LaurentPoly {
    &r.q_pow(root.m) * &r.y_weight(&root.root)
}

/// `a = (1−e)/(1−t_α e)`, `b = (1−t_α)/(1−t_α e)`, `c = t_α(1−e)/(1−t_α e)`,
/// `d = e(1−t_α)/(1−t_α e)` with `e = q^m e^α`.
pub fn r_coeffs(root: &AffineRoot, params: &QkzParams) -> RCoeffs {
    let r = params.ambient();
    let e = exp_affine_root(root, &r);
    let ta = if root.is_long() {
        params.t_long
    } else {
        params.t_short
    }
    .poly(&r);
    let one = r.one();
    let den = &one - &(&ta * &e);
    let frac = |num: LaurentPoly| RatFunc::new(num, den.clone()).expect("nonzero denominator");
    let one_minus_e = &one - &e;
    let one_minus_t = &one - &ta;
    let a = frac(one_minus_e.clone());
    let b = frac(one_minus_t.clone());
    let c = frac(&ta * &one_minus_e);
    let mut d = frac(&e * &one_minus_t);
    match params.perturbation {
        Perturbation::None => {}
        Perturbation::DPlusOne => d = &d + &r.fone(),
        Perturbation::DPlusY1 => d = &d + &RatFunc::from_poly(r.gen(Gen::Y(1))),
    }
    RCoeffs { a, b, c, d }
}
