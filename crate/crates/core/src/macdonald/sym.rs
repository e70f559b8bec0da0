//! Laurent polynomials in `y` with coefficients in `ℚ(q^{1/2}, t^{1/2})`,
//! stored as `numerator / scalar` with a `y`-free scalar.

use std::fmt;

use super::MacdonaldError;
use crate::ring::{Ambient, Gen, LaurentPoly, RatFunc};
use crate::weyl::{act_on_poly, dominant_rep, orbit_sum, SignedPerm, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymLaurent {
    num: LaurentPoly,
    /// The scalar denominator, kept as a list of factors so coefficients
    /// can be cancelled factor by factor.
    scalar: Vec<LaurentPoly>,
    invariant: bool,
}

fn y_indices(n: usize) -> Vec<usize> {
    (1..=n).map(|j| Gen::Y(j).index(n)).collect()
}

impl SymLaurent {
    /// `num / scalar`. When `invariant` is set, invariance under every
    /// `s_1, …, s_n` is checked here.
    pub fn new(
        num: LaurentPoly,
        scalar: LaurentPoly,
        invariant: bool,
    ) -> Result<Self, MacdonaldError> {
        Self::with_scalar_factors(num, vec![scalar], invariant)
    }

    /// `num / Π factors`.
    pub fn with_scalar_factors(
        num: LaurentPoly,
        factors: Vec<LaurentPoly>,
        invariant: bool,
    ) -> Result<Self, MacdonaldError> {
        let n = num.rank();
        if !num.is_free_of(Gen::X.index(n)) {
            return Err(MacdonaldError::NotInY);
        }
        for scalar in &factors {
            if scalar.is_zero()
                || scalar.nvars() != num.nvars()
                || y_indices(n)
                    .into_iter()
                    .chain([Gen::X.index(n)])
                    .any(|i| !scalar.is_free_of(i))
            {
                return Err(MacdonaldError::BadDenominator);
            }
        }
        if invariant {
            for i in 1..=n {
                let s = SignedPerm::simple_reflection(i, n)?;
                if act_on_poly(&s, &num)? != num {
                    return Err(MacdonaldError::NotInvariant(i));
                }
            }
        }
        Ok(SymLaurent {
            num,
            scalar: factors,
            invariant,
        })
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// The expanded scalar denominator.
    pub fn scalar(&self) -> LaurentPoly {
        self.scalar
            .iter()
            .fold(LaurentPoly::one(self.num.nvars()), |acc, f| &acc * f)
    }

    pub fn scalar_factors(&self) -> &[LaurentPoly] {
        &self.scalar
    }

    /// `c / scalar`, cancelling whole factors where they divide `c`.
    fn over_scalar(&self, c: LaurentPoly) -> RatFunc {
        self.scalar.iter().fold(RatFunc::from_poly(c), |acc, f| {
            &acc * &RatFunc::new_unreduced(LaurentPoly::one(f.nvars()), f.clone()).expect("nonzero")
        })
    }

    pub fn is_invariant(&self) -> bool {
        self.invariant
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        self.over_scalar(self.num.clone())
    }

    /// `(y-exponent, coefficient)` pairs in ascending order of exponent.
    pub fn monomial_terms(&self) -> Vec<(Vec<i32>, RatFunc)> {
        self.num
            .split_by(&y_indices(self.rank()))
            .into_iter()
            .map(|(e, c)| (e, self.over_scalar(c)))
            .collect()
    }

    /// Expansion `Σ a_ν m_ν`, largest `ν` (lexicographically) first.
    /// Fails if the polynomial is not `W`-invariant.
    pub fn m_expansion(&self) -> Result<Vec<(Weight, RatFunc)>, MacdonaldError> {
        let n = self.rank();
        let r = Ambient::new(n);
        let parts = self.num.split_by(&y_indices(n));
        let mut out = Vec::new();
        let mut rebuilt = r.zero();
        for (e, c) in parts.iter().rev() {
            if dominant_rep(e) != *e {
                continue;
            }
            rebuilt = &rebuilt + &(c * &orbit_sum(e, n)?);
            out.push((e.clone(), self.over_scalar(c.clone())));
        }
        if rebuilt != self.num {
            let bad = (1..=n)
                .find(|&i| {
                    let s = SignedPerm::simple_reflection(i, n).expect("in range");
                    act_on_poly(&s, &self.num).map_or(true, |p| p != self.num)
                })
                .unwrap_or(1);
            return Err(MacdonaldError::NotInvariant(bad));
        }
        Ok(out)
    }
}

fn y_monomial(e: &[i32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(j, &k)| {
            if k == 1 {
                format!("y{}", j + 1)
            } else {
                format!("y{}^{k}", j + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn format_weight(e: &[i32]) -> String {
    y_monomial(e)
}

impl fmt::Display for SymLaurent {
    /// `[c1]*y^a + [c2]*y^b + …`, ascending in the exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.monomial_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]*{}", y_monomial(e))?;
        }
        Ok(())
    }
}
