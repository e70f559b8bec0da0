//! Sparse multivariate Laurent polynomials over the rationals.
//!
//! Every polynomial lives in a fixed ambient ring with generators ordered as
//! `(v, u, y_1, ..., y_n, x)`, where `v = q^{1/2}` and `u = t^{1/2}`. Terms are
//! kept in a `BTreeMap` keyed by exponent vector, so iteration order is the
//! lexicographic order used by the canonical text rendering.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use super::RingError;

/// Exact coefficient type.
pub type Coeff = BigRational;

/// Builds a rational coefficient from an integer.
pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds the rational coefficient `num / den`.
pub fn rat(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A generator of the ambient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    /// `q^{1/2}`
    V,
    /// `t^{1/2}`
    U,
    /// `y_i = e^{ε_i}`, 1-based.
    Y(usize),
    /// The integration variable.
    X,
}

impl Gen {
    /// Position of the generator in an exponent vector for ambient rank `rank`.
    pub fn index(self, rank: usize) -> usize {
        match self {
            Gen::V => 0,
            Gen::U => 1,
            Gen::Y(i) => {
                assert!(i >= 1 && i <= rank, "y_{i} out of range for rank {rank}");
                1 + i
            }
            Gen::X => rank + 2,
        }
    }

    /// Inverse of [`Gen::index`].
    pub fn from_index(idx: usize, rank: usize) -> Gen {
        match idx {
            0 => Gen::V,
            1 => Gen::U,
            i if i == rank + 2 => Gen::X,
            i => Gen::Y(i - 1),
        }
    }

    fn name(self) -> String {
        match self {
            Gen::V => "v".into(),
            Gen::U => "u".into(),
            Gen::Y(i) => format!("y{i}"),
            Gen::X => "x".into(),
        }
    }
}

/// Exponents of `(v, u, y_1, ..., y_n, x)` for one monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(SmallVec<[i32; 8]>);

impl ExponentVector {
    pub fn zero(len: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, len))
    }

    pub fn from_slice(exps: &[i32]) -> Self {
        ExponentVector(SmallVec::from_slice(exps))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn get(&self, idx: usize) -> i32 {
        self.0[idx]
    }

    pub fn set(&mut self, idx: usize, value: i32) {
        self.0[idx] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Monomial product.
    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Monomial quotient.
    pub fn sub(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i32) -> Self {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }
}

/// A sparse Laurent polynomial with exact rational coefficients.
///
/// No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Coeff>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    pub fn monomial(exps: ExponentVector, c: Coeff) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, Coeff)>,
    {
        let mut acc: BTreeMap<ExponentVector, Coeff> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            *acc.entry(e).or_insert_with(Coeff::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { nvars, terms: acc }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Ambient rank `n` (number of `y` generators).
    pub fn rank(&self) -> usize {
        self.nvars - 3
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| e.is_zero() && c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &ExponentVector) -> Coeff {
        self.terms.get(exps).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Lexicographically least term.
    pub fn lowest_term(&self) -> Option<(&ExponentVector, &Coeff)> {
        self.terms.iter().next()
    }

    /// Lexicographically greatest term.
    pub fn highest_term(&self) -> Option<(&ExponentVector, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// The constant coefficient if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// True when no monomial involves generator index `var`.
    pub fn is_free_of(&self, var: usize) -> bool {
        self.terms.keys().all(|e| e.get(var) == 0)
    }

    fn check_rank(&self, other: &Self) -> Result<(), RingError> {
        if self.nvars != other.nvars {
            return Err(RingError::RankMismatch {
                left: self.nvars.saturating_sub(3),
                right: other.nvars.saturating_sub(3),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        out.add_assign_scaled(other, &Coeff::one(), None);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        out.add_assign_scaled(other, &-Coeff::one(), None);
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_rank(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero(self.nvars));
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            return Ok(other.mul_term(e, c));
        }
        if other.terms.len() == 1 {
            let (e, c) = other.terms.iter().next().unwrap();
            return Ok(self.mul_term(e, c));
        }
        let mut acc: HashMap<ExponentVector, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.add(eb);
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(slot) => *slot += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// `self += k * m * other`, where `m` is an optional monomial shift.
    pub(crate) fn add_assign_scaled(
        &mut self,
        other: &Self,
        k: &Coeff,
        shift: Option<&ExponentVector>,
    ) {
        for (e, c) in &other.terms {
            let key = match shift {
                Some(s) => e.add(s),
                None => e.clone(),
            };
            let delta = c * k;
            match self.terms.get_mut(&key) {
                Some(slot) => {
                    *slot += delta;
                    if slot.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, delta);
                }
            }
        }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, exps: &ExponentVector, c: &Coeff) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (e.add(exps), k * c))
            .collect();
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        self.mul_term(&ExponentVector::zero(self.nvars), c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = LaurentPoly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Per-variable `(min, max)` exponents. Empty for the zero polynomial.
    pub fn degree_bounds(&self) -> Vec<(i32, i32)> {
        let mut bounds: Vec<(i32, i32)> = Vec::new();
        for e in self.terms.keys() {
            if bounds.is_empty() {
                bounds = e.as_slice().iter().map(|&d| (d, d)).collect();
            } else {
                for (b, &d) in bounds.iter_mut().zip(e.as_slice()) {
                    b.0 = b.0.min(d);
                    b.1 = b.1.max(d);
                }
            }
        }
        bounds
    }

    /// Exact division: returns `Some(q)` with `self = q * divisor`, or `None`
    /// when `divisor` does not divide `self`.
    ///
    /// Runs the lexicographic division algorithm; the quotient's exponents are
    /// confined to the box implied by per-variable degree bounds, which makes
    /// the loop finite even though Laurent exponents are unbounded below.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() || self.nvars != divisor.nvars {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero(self.nvars));
        }
        if divisor.terms.len() == 1 {
            let (e, c) = divisor.terms.iter().next().unwrap();
            return Some(self.mul_term(&e.neg(), &c.recip()));
        }
        if divisor.terms.len() > self.terms.len() {
            return None;
        }
        let ba = self.degree_bounds();
        let bd = divisor.degree_bounds();
        let mut lo = Vec::with_capacity(self.nvars);
        let mut hi = Vec::with_capacity(self.nvars);
        for (a, d) in ba.iter().zip(&bd) {
            let (l, h) = (a.0 - d.0, a.1 - d.1);
            if l > h {
                return None;
            }
            lo.push(l);
            hi.push(h);
        }
        let (lead_e, lead_c) = divisor.highest_term().unwrap();
        let (lead_e, lead_c_inv) = (lead_e.clone(), lead_c.recip());
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        let neg_one = -Coeff::one();
        while let Some((re, rc)) = rem.highest_term() {
            let qe = re.sub(&lead_e);
            let in_box = qe
                .as_slice()
                .iter()
                .enumerate()
                .all(|(i, &d)| d >= lo[i] && d <= hi[i]);
            if !in_box {
                return None;
            }
            let qc = rc * &lead_c_inv;
            rem.add_assign_scaled(divisor, &(&qc * &neg_one), Some(&qe));
            quot.insert(qe, qc);
        }
        Some(LaurentPoly {
            nvars: self.nvars,
            terms: quot,
        })
    }

    /// Applies a simultaneous monomial substitution.
    pub fn substitute(&self, sub: &Substitution) -> Result<Self, RingError> {
        if sub.images.len() != self.nvars {
            return Err(RingError::RankMismatch {
                left: self.rank(),
                right: sub.images.len().saturating_sub(3),
            });
        }
        let mut out: BTreeMap<ExponentVector, Coeff> = BTreeMap::new();
        for (e, c) in &self.terms {
            let (ne, nc) = sub.apply_monomial(e);
            *out.entry(ne).or_insert_with(Coeff::zero) += c * nc;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: out,
        })
    }

    /// Substitutes a single generator by a signed monomial.
    ///
    /// `image` must be a single term; anything else is rejected.
    pub fn substitute_monomial(&self, var: Gen, image: &LaurentPoly) -> Result<Self, RingError> {
        let sub = Substitution::identity(self.rank()).with_poly(var, image)?;
        self.substitute(&sub)
    }

    /// Floating-point evaluation.
    pub fn eval(&self, at: &Assignment) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| at.monomial(e) * coeff_to_f64(c))
            .sum()
    }

    /// Sum of absolute values of the evaluated terms; a scale for
    /// cancellation checks.
    pub fn eval_abs_scale(&self, at: &Assignment) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| (at.monomial(e) * coeff_to_f64(c)).norm())
            .sum()
    }

    /// Splits the polynomial by the exponents of the generators in `keep`,
    /// returning a map from those exponents to the remaining polynomial.
    pub fn split_by(&self, keep: &[usize]) -> BTreeMap<Vec<i32>, LaurentPoly> {
        let mut out: BTreeMap<Vec<i32>, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<i32> = keep.iter().map(|&i| e.get(i)).collect();
            let mut rest = e.clone();
            for &i in keep {
                rest.set(i, 0);
            }
            out.entry(key)
                .or_insert_with(|| LaurentPoly::zero(self.nvars))
                .terms
                .insert(rest, c.clone());
        }
        out
    }
}

pub(crate) fn coeff_to_f64(c: &Coeff) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        let n = c.numer().to_f64().unwrap_or(f64::NAN);
        let d = c.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn coeff_pow(c: &Coeff, k: i32) -> Coeff {
    if k >= 0 {
        num_traits::pow(c.clone(), k as usize)
    } else {
        num_traits::pow(c.recip(), (-k) as usize)
    }
}

/// A simultaneous substitution sending each generator to `coeff * monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    images: Vec<(Coeff, ExponentVector)>,
}

impl Substitution {
    /// The identity substitution on the ring of rank `rank`.
    pub fn identity(rank: usize) -> Self {
        let nvars = rank + 3;
        let images = (0..nvars)
            .map(|i| {
                let mut e = ExponentVector::zero(nvars);
                e.set(i, 1);
                (Coeff::one(), e)
            })
            .collect();
        Substitution { images }
    }

    fn rank(&self) -> usize {
        self.images.len() - 3
    }

    /// Sends `var` to `coeff * m`, `m` given by exponents.
    pub fn with(mut self, var: Gen, coeff: Coeff, exps: ExponentVector) -> Self {
        assert!(!coeff.is_zero(), "substitution image must be a unit");
        let idx = var.index(self.rank());
        self.images[idx] = (coeff, exps);
        self
    }

    /// Sends `var` to a single-term polynomial.
    pub fn with_poly(self, var: Gen, image: &LaurentPoly) -> Result<Self, RingError> {
        if image.len() != 1 || image.nvars() != self.images.len() {
            return Err(RingError::NonMonomialImage);
        }
        let (e, c) = image.terms().next().unwrap();
        Ok(self.with(var, c.clone(), e.clone()))
    }

    /// Image of one monomial as `(exponents, coefficient)`.
    pub fn apply_monomial(&self, e: &ExponentVector) -> (ExponentVector, Coeff) {
        let mut out = ExponentVector::zero(self.images.len());
        let mut coeff = Coeff::one();
        for (i, &k) in e.as_slice().iter().enumerate() {
            if k == 0 {
                continue;
            }
            let (c, img) = &self.images[i];
            if !c.is_one() {
                coeff *= coeff_pow(c, k);
            }
            for (slot, &d) in out.0.iter_mut().zip(img.as_slice()) {
                *slot += d * k;
            }
        }
        (out, coeff)
    }
}

/// Complex values for every generator, used by numeric evaluation.
#[derive(Clone, Debug)]
pub struct Assignment {
    values: Vec<Complex64>,
}

impl Assignment {
    /// `v = sqrt(q)` and `u = sqrt(t)` take the principal branch for positive
    /// real `q`, `t`.
    pub fn new(q: f64, t: f64, y: &[Complex64], x: Complex64) -> Self {
        let mut values = Vec::with_capacity(y.len() + 3);
        values.push(Complex64::new(q.sqrt(), 0.0));
        values.push(Complex64::new(t.sqrt(), 0.0));
        values.extend_from_slice(y);
        values.push(x);
        Assignment { values }
    }

    pub fn from_values(values: Vec<Complex64>) -> Self {
        Assignment { values }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn rank(&self) -> usize {
        self.values.len() - 3
    }

    fn monomial(&self, e: &ExponentVector) -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for (&k, z) in e.as_slice().iter().zip(&self.values) {
            if k != 0 {
                acc *= z.powi(k);
            }
        }
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("LaurentPoly addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("LaurentPoly subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("LaurentPoly multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Coeff::one())
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &ExponentVector, rank: usize) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.as_slice().iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        let g = Gen::from_index(i, rank).name();
        if k == 1 {
            write!(f, "{g}")?;
        } else {
            write!(f, "{g}^{k}")?;
        }
    }
    Ok(())
}

/// Canonical rendering: terms in ascending lexicographic exponent order on
/// `(v, u, y1..yn, x)`, e.g. `1 - 3/2*v^2*y1^-2 + x`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let rank = self.rank();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, e, rank)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ambient;

    #[test]
    fn additive_inverse_cancels() {
        let r = Ambient::new(1);
        let y1 = r.gen(Gen::Y(1));
        assert!((&y1 + &(-&y1)).is_zero());
    }

    #[test]
    fn cancellation_with_t() {
        let r = Ambient::new(1);
        let ty = &r.t() * &r.gen(Gen::Y(1));
        let a = &r.one() - &ty;
        assert_eq!(&a + &ty, r.one());
    }

    #[test]
    fn doubling() {
        let r = Ambient::new(1);
        let m = r.mono(&[(Gen::X, 3), (Gen::Y(1), 1)]);
        let two = r.constant(int(2));
        assert_eq!(&m + &m, &two * &m);
    }

    #[test]
    fn difference_of_squares() {
        let r = Ambient::new(1);
        let z = r.mono(&[(Gen::Y(1), 1), (Gen::X, -1)]);
        let lhs = &(&r.one() - &z) * &(&r.one() + &z);
        assert_eq!(lhs, &r.one() - &(&z * &z));
    }

    #[test]
    fn q_expansion() {
        let r = Ambient::new(1);
        let y = r.gen(Gen::Y(1));
        let q = r.q();
        let qinv = r.mono(&[(Gen::V, -2)]);
        let lhs = &(&r.one() - &(&q * &y)) * &(&r.one() - &(&qinv * &y));
        let rhs = &(&r.one() - &(&(&q + &qinv) * &y)) + &(&y * &y);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = Ambient::new(1).one();
        let b = Ambient::new(2).one();
        assert!(matches!(a.try_add(&b), Err(RingError::RankMismatch { .. })));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn exact_division() {
        let r = Ambient::new(2);
        let a = &r.one() - &r.mono(&[(Gen::U, 2), (Gen::Y(1), -1), (Gen::X, -1)]);
        let b = &r.gen(Gen::Y(2)) + &r.mono(&[(Gen::Y(1), 3), (Gen::V, -1)]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        let c = &r.one() - &r.gen(Gen::Y(2));
        assert_eq!(p.div_exact(&c), None);
    }

    #[test]
    fn rendering_is_lexicographic() {
        let r = Ambient::new(1);
        let p = &(&r.mono(&[(Gen::Y(1), -2)]).scale(&rat(-3, 2)) + &r.one()) + &r.gen(Gen::X);
        assert_eq!(p.to_string(), "-3/2*y1^-2 + 1 + x");
        assert_eq!(LaurentPoly::zero(4).to_string(), "0");
    }

    #[test]
    fn non_monomial_image_rejected() {
        let r = Ambient::new(1);
        let img = &r.one() + &r.gen(Gen::Y(1));
        let err = r.gen(Gen::Y(1)).substitute_monomial(Gen::Y(1), &img);
        assert_eq!(err, Err(RingError::NonMonomialImage));
    }

    #[test]
    fn x_to_qx_on_power() {
        let r = Ambient::new(1);
        let x2 = r.mono(&[(Gen::X, 2)]);
        let qx = r.mono(&[(Gen::V, 2), (Gen::X, 1)]);
        let out = x2.substitute_monomial(Gen::X, &qx).unwrap();
        assert_eq!(out, r.mono(&[(Gen::V, 4), (Gen::X, 2)]));
    }
}
