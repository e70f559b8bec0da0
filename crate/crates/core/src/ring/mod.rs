//! Exact arithmetic in `Q[v^±, u^±, y_1^±, ..., y_n^±, x^±]` and its fraction
//! field, with `q = v^2` and `t = u^2`.

pub mod frac;
pub mod poly;

pub use frac::RatFunc;
pub use poly::{int, rat, Assignment, Coeff, ExponentVector, Gen, LaurentPoly, Substitution};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RingError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution image is not a single signed monomial")]
    NonMonomialImage,
    #[error("denominator vanishes at the evaluation point (|den| = {0:e})")]
    NearSingular(f64),
}

/// Constructor shorthand for one ambient rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ambient {
    n: usize,
}

impl Ambient {
    pub fn new(n: usize) -> Self {
        Ambient { n }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 3
    }

    pub fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(self.nvars())
    }

    pub fn one(&self) -> LaurentPoly {
        LaurentPoly::one(self.nvars())
    }

    pub fn constant(&self, c: Coeff) -> LaurentPoly {
        LaurentPoly::constant(self.nvars(), c)
    }

    pub fn int(&self, k: i64) -> LaurentPoly {
        self.constant(int(k))
    }

    pub fn exps(&self, powers: &[(Gen, i32)]) -> ExponentVector {
        let mut e = ExponentVector::zero(self.nvars());
        for &(g, k) in powers {
            let idx = g.index(self.n);
            e.set(idx, e.get(idx) + k);
        }
        e
    }

    /// The monomial `prod g^k`.
    pub fn mono(&self, powers: &[(Gen, i32)]) -> LaurentPoly {
        LaurentPoly::monomial(self.exps(powers), Coeff::from_integer(1.into()))
    }

    /// `c * prod g^k`.
    pub fn term(&self, c: Coeff, powers: &[(Gen, i32)]) -> LaurentPoly {
        LaurentPoly::monomial(self.exps(powers), c)
    }

    pub fn gen(&self, g: Gen) -> LaurentPoly {
        self.mono(&[(g, 1)])
    }

    pub fn q(&self) -> LaurentPoly {
        self.mono(&[(Gen::V, 2)])
    }

    pub fn t(&self) -> LaurentPoly {
        self.mono(&[(Gen::U, 2)])
    }

    /// `q^k` as a monomial in `v`.
    pub fn q_pow(&self, k: i32) -> LaurentPoly {
        self.mono(&[(Gen::V, 2 * k)])
    }

    /// `y^w = prod y_i^{w_i}` for an integer weight.
    pub fn y_weight(&self, w: &[i32]) -> LaurentPoly {
        assert_eq!(w.len(), self.n);
        let powers: Vec<(Gen, i32)> = w
            .iter()
            .enumerate()
            .map(|(i, &k)| (Gen::Y(i + 1), k))
            .collect();
        self.mono(&powers)
    }

    pub fn frac(&self, p: LaurentPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    pub fn fone(&self) -> RatFunc {
        RatFunc::one(self.nvars())
    }

    pub fn fzero(&self) -> RatFunc {
        RatFunc::zero(self.nvars())
    }
}
