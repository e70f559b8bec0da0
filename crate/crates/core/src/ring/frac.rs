//! Rational functions as a numerator over a multiset of denominator factors.
//!
//! There is no multivariate gcd. Each denominator factor is normalized so
//! that its lexicographically least monomial is `1`; the stripped unit moves
//! to the numerator. Identical factors therefore collide structurally, which
//! gives a cheap common multiple for addition. Whenever the numerator is
//! exactly divisible by a factor the pair is cancelled. Equality is always
//! decided by cross-multiplication, never by comparing normal forms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::poly::{Assignment, Coeff, ExponentVector, LaurentPoly, Substitution};
use super::RingError;

/// Absolute cutoff used to flag a vanishing denominator factor, measured
/// against the factor's own term scale.
const SINGULAR_TOL: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: BTreeMap<LaurentPoly, u32>,
}

/// Splits `p` as `unit * normalized`, with `unit = c * m` a single term.
/// Returns `None` for monomials (the whole thing is a unit).
fn normalize_factor(p: &LaurentPoly) -> (Coeff, ExponentVector, Option<LaurentPoly>) {
    let (e, c) = p.lowest_term().expect("zero factor");
    let (e, c) = (e.clone(), c.clone());
    if p.len() == 1 {
        return (c, e, None);
    }
    let normalized = p.mul_term(&e.neg(), &c.recip());
    (c, e, Some(normalized))
}

impl RatFunc {
    pub fn zero(nvars: usize) -> Self {
        RatFunc {
            num: LaurentPoly::zero(nvars),
            den: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::one(nvars))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: BTreeMap::new(),
        }
    }

    /// `num / den`, with the denominator stored as one normalized factor.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if num.nvars() != den.nvars() {
            return Err(RingError::RankMismatch {
                left: num.rank(),
                right: den.rank(),
            });
        }
        let mut out = RatFunc::from_poly(num);
        out.push_factor(&den, 1);
        out.reduce();
        Ok(out)
    }

    /// Like [`RatFunc::new`] but leaves the fraction exactly as given
    /// (after unit stripping), without trial cancellation.
    pub fn new_unreduced(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let mut out = RatFunc::from_poly(num);
        out.push_factor(&den, 1);
        Ok(out)
    }

    /// Multiplies the denominator by `p^k`.
    fn push_factor(&mut self, p: &LaurentPoly, k: u32) {
        if k == 0 {
            return;
        }
        let (c, e, normalized) = normalize_factor(p);
        let unit_inv_c = num_traits::pow(c.recip(), k as usize);
        self.num = self.num.mul_term(&e.scale(-(k as i32)), &unit_inv_c);
        if let Some(f) = normalized {
            *self.den.entry(f).or_insert(0) += k;
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Normalized denominator factors with multiplicities.
    pub fn denominator_factors(&self) -> impl Iterator<Item = (&LaurentPoly, u32)> {
        self.den.iter().map(|(f, &k)| (f, k))
    }

    /// The expanded denominator.
    pub fn denominator(&self) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.nvars());
        for (f, &k) in &self.den {
            for _ in 0..k {
                out = &out * f;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// The numerator when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_empty().then_some(&self.num)
    }

    /// Cancels every denominator factor that divides the numerator exactly.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<LaurentPoly> = self.den.keys().cloned().collect();
        for f in keys {
            let mut k = self.den[&f];
            while k > 0 {
                match self.num.div_exact(&f) {
                    Some(qt) => {
                        self.num = qt;
                        k -= 1;
                    }
                    None => break,
                }
            }
            if k == 0 {
                self.den.remove(&f);
            } else {
                self.den.insert(f, k);
            }
        }
    }

    pub fn reduced(mut self) -> Self {
        self.reduce();
        self
    }

    fn check_rank(&self, other: &Self) -> Result<(), RingError> {
        if self.nvars() != other.nvars() {
            return Err(RingError::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }

    /// Common multiple of both denominators (max multiplicity per factor),
    /// with the cofactors `L / A` and `L / B`.
    fn common_den(&self, other: &Self) -> (BTreeMap<LaurentPoly, u32>, LaurentPoly, LaurentPoly) {
        let nvars = self.nvars();
        let mut lcm = self.den.clone();
        let mut cof_a = LaurentPoly::one(nvars);
        let mut cof_b = LaurentPoly::one(nvars);
        for (f, &kb) in &other.den {
            let ka = self.den.get(f).copied().unwrap_or(0);
            if kb > ka {
                cof_a = &cof_a * &f.pow(kb - ka);
                lcm.insert(f.clone(), kb);
            }
        }
        for (f, &ka) in &self.den {
            let kb = other.den.get(f).copied().unwrap_or(0);
            if ka > kb {
                cof_b = &cof_b * &f.pow(ka - kb);
            }
        }
        (lcm, cof_a, cof_b)
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Result<Self, RingError> {
        self.check_rank(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(if negate { -other } else { other.clone() });
        }
        let (lcm, cof_a, cof_b) = self.common_den(other);
        let left = &self.num * &cof_a;
        let right = &other.num * &cof_b;
        let num = if negate {
            &left - &right
        } else {
            &left + &right
        };
        let mut out = RatFunc { num, den: lcm };
        out.reduce();
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.add_signed(other, false)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.add_signed(other, true)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_rank(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(RatFunc::zero(self.nvars()));
        }
        let mut na = self.num.clone();
        let mut nb = other.num.clone();
        let mut da = self.den.clone();
        let mut db = other.den.clone();
        cross_cancel(&mut na, &mut db);
        cross_cancel(&mut nb, &mut da);
        for (f, k) in db {
            *da.entry(f).or_insert(0) += k;
        }
        Ok(RatFunc {
            num: &na * &nb,
            den: da,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, RingError> {
        self.check_rank(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let mut out = RatFunc::from_poly(self.denominator_unit_free());
        out.push_factor(&self.num, 1);
        Ok(out)
    }

    /// Expanded denominator; every factor is already unit-free.
    fn denominator_unit_free(&self) -> LaurentPoly {
        self.denominator()
    }

    pub fn pow(&self, k: i32) -> Result<Self, RingError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut out = RatFunc::one(self.nvars());
        for _ in 0..k.unsigned_abs() {
            out = out.try_mul(&base)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiplies by a polynomial, cancelling against the denominator.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        self.try_mul(&RatFunc::from_poly(p.clone())).expect("rank")
    }

    /// Exact equality by cross-multiplication against a common multiple of
    /// the two denominators.
    pub fn frac_equal(&self, other: &Self) -> bool {
        if self.nvars() != other.nvars() {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        let (_, cof_a, cof_b) = self.common_den(other);
        &self.num * &cof_a == &other.num * &cof_b
    }

    /// Applies a monomial substitution to numerator and every factor.
    pub fn substitute(&self, sub: &Substitution) -> Result<Self, RingError> {
        let mut out = RatFunc::from_poly(self.num.substitute(sub)?);
        for (f, &k) in &self.den {
            let g = f.substitute(sub)?;
            if g.is_zero() {
                return Err(RingError::DivisionByZero);
            }
            out.push_factor(&g, k);
        }
        out.reduce();
        Ok(out)
    }

    /// Substitutes one generator by a single-term image.
    pub fn substitute_monomial(
        &self,
        var: super::Gen,
        image: &LaurentPoly,
    ) -> Result<Self, RingError> {
        let sub = Substitution::identity(self.rank()).with_poly(var, image)?;
        self.substitute(&sub)
    }

    /// True when neither the numerator nor any stored factor involves the
    /// generator at index `var`. Sound only as a sufficient condition; for a
    /// decisive test combine with [`RatFunc::is_invariant_under`].
    pub fn is_free_of(&self, var: usize) -> bool {
        self.num.is_free_of(var) && self.den.keys().all(|f| f.is_free_of(var))
    }

    pub fn is_invariant_under(&self, sub: &Substitution) -> Result<bool, RingError> {
        Ok(self.substitute(sub)?.frac_equal(self))
    }

    /// Floating-point evaluation; errors if a denominator factor is within
    /// `1e-12` of zero relative to its term scale.
    pub fn eval(&self, at: &Assignment) -> Result<Complex64, RingError> {
        let mut den = Complex64::new(1.0, 0.0);
        for (f, &k) in &self.den {
            let val = f.eval(at);
            let scale = f.eval_abs_scale(at).max(1.0);
            if val.norm() < SINGULAR_TOL * scale {
                return Err(RingError::NearSingular(val.norm()));
            }
            den *= val.powi(k as i32);
        }
        Ok(self.num.eval(at) / den)
    }
}

/// Divides `num` by as many factors of `den` as possible, removing them.
fn cross_cancel(num: &mut LaurentPoly, den: &mut BTreeMap<LaurentPoly, u32>) {
    if den.is_empty() || num.is_zero() {
        return;
    }
    let keys: Vec<LaurentPoly> = den.keys().cloned().collect();
    for f in keys {
        let mut k = den[&f];
        while k > 0 {
            match num.div_exact(&f) {
                Some(qt) => {
                    *num = qt;
                    k -= 1;
                }
                None => break,
            }
        }
        if k == 0 {
            den.remove(&f);
        } else {
            den.insert(f, k);
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.frac_equal(other)
    }
}

impl Eq for RatFunc {}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $call:ident) => {
        impl $tr for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                self.$call(rhs)
                    .expect(concat!("RatFunc ", stringify!($method)))
            }
        }
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.scale(&-Coeff::one())
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

/// `num` alone for polynomials, otherwise `(num)/(den)` with the expanded
/// denominator.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.denominator())
        }
    }
}
