//! `E = Σ_{a ∈ {±1}^n} Π_{i<j} (1−t y_i^{a_i} y_j^{a_j})/(1−y_i^{a_i} y_j^{a_j})
//!      · Π_i (1−t y_i^{2a_i})/(1−y_i^{2a_i}) · T_{y_i}^{a_i/2}`,
//! where `T_{y_i}^{a_i/2}` sends `y_i ↦ q^{a_i/2} y_i`.

use rayon::prelude::*;

use super::MacdonaldError;
use crate::ring::{int, Ambient, Gen, LaurentPoly, RatFunc, Substitution};
use crate::weyl::is_partition;

fn sign_vectors(n: usize) -> Vec<Vec<i32>> {
    (0..1u32 << n)
        .map(|bits| {
            (0..n)
                .map(|i| if bits >> i & 1 == 1 { -1 } else { 1 })
                .collect()
        })
        .collect()
}

fn ratio(r: &Ambient, z: LaurentPoly) -> RatFunc {
    RatFunc::new(&r.one() - &(&r.t() * &z), &r.one() - &z).expect("nonzero")
}

/// The coefficient of `T^{a/2}` in `E`.
pub fn e_coefficient(n: usize, a: &[i32]) -> RatFunc {
    let r = Ambient::new(n);
    let mut c = r.fone();
    for i in 0..n {
        for j in i + 1..n {
            let z = r.mono(&[(Gen::Y(i + 1), a[i]), (Gen::Y(j + 1), a[j])]);
            c = &c * &ratio(&r, z);
        }
        c = &c * &ratio(&r, r.mono(&[(Gen::Y(i + 1), 2 * a[i])]));
    }
    c
}

/// `E f`, summed over all `2^n` sign vectors. The result is not forced
/// into polynomial form.
pub fn apply_e(f: &RatFunc) -> RatFunc {
    let n = f.rank();
    let r = Ambient::new(n);
    sign_vectors(n)
        .par_iter()
        .map(|a| {
            let mut sub = Substitution::identity(n);
            for (i, &ai) in a.iter().enumerate() {
                sub = sub.with(
                    Gen::Y(i + 1),
                    int(1),
                    r.exps(&[(Gen::V, ai), (Gen::Y(i + 1), 1)]),
                );
            }
            &e_coefficient(n, a) * &f.substitute(&sub).expect("monomial shift")
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(r.fzero(), |acc, term| &acc + &term)
}

fn check_partition(mu: &[i32], n: usize) -> Result<(), MacdonaldError> {
    if mu.len() != n || !is_partition(mu) {
        return Err(MacdonaldError::NotPartition(mu.to_vec()));
    }
    Ok(())
}

/// `c_μ = q^{−|μ|/2} Π_{j=1}^n (1 + t^j q^{μ_{n−j+1}})`.
pub fn eigenvalue_c(mu: &[i32], n: usize) -> Result<LaurentPoly, MacdonaldError> {
    check_partition(mu, n)?;
    let r = Ambient::new(n);
    let total: i32 = mu.iter().sum();
    let mut c = r.mono(&[(Gen::V, -total)]);
    for j in 1..=n {
        let term = &r.one() + &r.mono(&[(Gen::U, 2 * j as i32), (Gen::V, 2 * mu[n - j])]);
        c = &c * &term;
    }
    Ok(c)
}

/// `Σ_a Π_j q^{μ_j a_j/2} t^{(n−j+1) a_j/2}`, the unsimplified sum form.
/// It equals `t^{−n(n+1)/4} c_μ`, so it does not agree with `E` on `1`.
pub fn eigenvalue_c_sum(mu: &[i32], n: usize) -> Result<LaurentPoly, MacdonaldError> {
    check_partition(mu, n)?;
    let r = Ambient::new(n);
    let mut c = r.one();
    for j in 1..=n {
        let k = (n - j + 1) as i32;
        let term = &r.mono(&[(Gen::V, mu[j - 1]), (Gen::U, k)])
            + &r.mono(&[(Gen::V, -mu[j - 1]), (Gen::U, -k)]);
        c = &c * &term;
    }
    Ok(c)
}
