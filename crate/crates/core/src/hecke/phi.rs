//! The rational functions `φ_{w_1}, …, φ_{w_{2n}}`.

use crate::ring::{Ambient, Gen, LaurentPoly, RatFunc};

/// `1 − c · y_μ^{s} / x` where `c` is a monomial in `v, u`.
pub fn lin(r: &Ambient, coeff: &[(Gen, i32)], mu: usize, sign: i32) -> LaurentPoly {
    let mut powers = coeff.to_vec();
    powers.push((Gen::Y(mu), sign));
    powers.push((Gen::X, -1));
    &r.one() - &r.mono(&powers)
}

/// `1 − y_μ^{s}/x`.
pub fn plain(r: &Ambient, mu: usize, sign: i32) -> LaurentPoly {
    lin(r, &[], mu, sign)
}

/// `1 − t y_μ^{s}/x`.
pub fn with_t(r: &Ambient, mu: usize, sign: i32) -> LaurentPoly {
    lin(r, &[(Gen::U, 2)], mu, sign)
}

fn product<I: IntoIterator<Item = LaurentPoly>>(r: &Ambient, it: I) -> LaurentPoly {
    it.into_iter().fold(r.one(), |acc, p| &acc * &p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiBasis {
    n: usize,
    entries: Vec<RatFunc>,
}

impl PhiBasis {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// `φ_{w_k}`, 1-based.
    pub fn get(&self, k: usize) -> &RatFunc {
        &self.entries[k - 1]
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }
}

/// Builds `φ_{w_i}` for `1 ≤ i ≤ 2n`:
/// `Π_{μ<i}(1−y_μ^{-1}/x) / Π_{μ≤i}(1−t y_μ^{-1}/x)` for `i ≤ n`, and
/// `Π_{2n−i+1<μ≤n}(1−y_μ/x) / Π_{2n−i+1≤μ≤n}(1−t y_μ/x) · Π_μ (1−y_μ^{-1}/x)/(1−t y_μ^{-1}/x)`
/// for `i > n`.
pub fn phi_entry(n: usize, i: usize) -> RatFunc {
    let r = Ambient::new(n);
    if i <= n {
        let num = product(&r, (1..i).map(|mu| plain(&r, mu, -1)));
        return over_factors(num, (1..=i).map(|mu| with_t(&r, mu, -1)));
    }
    let lo = 2 * n - i + 1;
    let num = &product(&r, (lo + 1..=n).map(|mu| plain(&r, mu, 1)))
        * &product(&r, (1..=n).map(|mu| plain(&r, mu, -1)));
    let den = (lo..=n)
        .map(|mu| with_t(&r, mu, 1))
        .chain((1..=n).map(|mu| with_t(&r, mu, -1)));
    over_factors(num, den)
}

/// `num / Π factors`, keeping the denominator factored so later sums and
/// products can cancel factor by factor.
fn over_factors<I: IntoIterator<Item = LaurentPoly>>(num: LaurentPoly, den: I) -> RatFunc {
    den.into_iter().fold(RatFunc::from_poly(num), |acc, f| {
        &acc * &RatFunc::new_unreduced(LaurentPoly::one(f.nvars()), f).expect("nonzero")
    })
}

pub fn phi(n: usize) -> PhiBasis {
    assert!(n >= 1, "rank must be positive");
    PhiBasis {
        n,
        entries: (1..=2 * n).map(|i| phi_entry(n, i)).collect(),
    }
}

/// `Π_μ (1 − t y_μ/x)(1 − t y_μ^{-1}/x)`: a common denominator of every `φ`.
pub fn common_denominator(n: usize) -> LaurentPoly {
    let r = Ambient::new(n);
    product(
        &r,
        (1..=n).flat_map(|mu| [with_t(&r, mu, 1), with_t(&r, mu, -1)]),
    )
}
