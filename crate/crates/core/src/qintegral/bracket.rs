//! The integrand `ψ Φ dx/x` and its residue sum over the cycle.
//!
//! `Φ = x^λ Π_j (t y_j/x)_∞ (t y_j^{-1}/x)_∞ / ((y_j/x)_∞ (y_j^{-1}/x)_∞)`.
//! The pole at `x_0 = b q^m` comes from the factor `1 − b q^m/x =
//! (x − x_0)/x` of `(b/x)_∞`; together with the measure `dx/x` its residue
//! is `x_0^λ ψ(x_0)` times every other factor of `Φ` at `x_0`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::point::{qpoch_skip, NumericPoint, PoleLadder, TRUNCATION_EPS};
use super::QintegralError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Selector {
    One,
    /// `φ_{w_k}`, 1-based.
    Phi(usize),
    /// `s_0 φ_{w_k}`: `y_1 ↦ q y_1^{-1}` in the whole integrand.
    S0Phi(usize),
    /// `Π_j (1−y_j/x)(1−y_j^{-1}/x) / ((1−t y_j/x)(1−t y_j^{-1}/x))`.
    FullRatio,
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// `φ_{w_k}(x)` at numeric `y`, `t`.
pub fn phi_numeric(k: usize, x: Complex64, y: &[Complex64], t: f64) -> Complex64 {
    let n = y.len();
    let plain = |b: Complex64| one() - b / x;
    let with_t = |b: Complex64| one() - b * t / x;
    let mut num = one();
    let mut den = one();
    if k <= n {
        for mu in 1..k {
            num *= plain(y[mu - 1].inv());
        }
        for mu in 1..=k {
            den *= with_t(y[mu - 1].inv());
        }
        return num / den;
    }
    let lo = 2 * n - k + 1;
    for mu in lo + 1..=n {
        num *= plain(y[mu - 1]);
    }
    for mu in lo..=n {
        den *= with_t(y[mu - 1]);
    }
    for z in y {
        num *= plain(z.inv());
        den *= with_t(z.inv());
    }
    num / den
}

fn psi_value(sel: Selector, x: Complex64, pt: &NumericPoint) -> Complex64 {
    match sel {
        Selector::One => one(),
        Selector::Phi(k) | Selector::S0Phi(k) => phi_numeric(k, x, &pt.y, pt.t),
        Selector::FullRatio => pt.y.iter().fold(one(), |acc, z| {
            let zi = z.inv();
            acc * (one() - z / x) * (one() - zi / x)
                / ((one() - z * pt.t / x) * (one() - zi * pt.t / x))
        }),
    }
}

fn resolve(sel: Selector, pt: &NumericPoint) -> Result<(Selector, NumericPoint), QintegralError> {
    match sel {
        Selector::S0Phi(k) => Ok((Selector::Phi(k), pt.s0_point()?)),
        _ => Ok((sel, pt.clone())),
    }
}

fn check_selector(sel: Selector, n: usize) -> Result<(), QintegralError> {
    match sel {
        Selector::Phi(k) | Selector::S0Phi(k) if k == 0 || k > 2 * n => Err(
            QintegralError::BadParameter(format!("phi index {k} out of range 1..={}", 2 * n)),
        ),
        _ => Ok(()),
    }
}

/// `ψ(x) Φ(x) / x`, the integrand against `dx` with `2πi` dropped.
pub fn integrand(
    x: Complex64,
    sel: Selector,
    pt: &NumericPoint,
) -> Result<Complex64, QintegralError> {
    check_selector(sel, pt.rank())?;
    let (sel, pt) = resolve(sel, pt)?;
    for l in pt.ladders() {
        for m in 0..pt.prod_trunc {
            let p = l.point(pt.q, m);
            if (x - p).norm() <= pt.tol * p.norm().max(1e-300) {
                return Err(QintegralError::NearPole(x.to_string()));
            }
        }
    }
    let n = pt.prod_trunc;
    let mut val = x.powi(pt.lambda as i32) * psi_value(sel, x, &pt) / x;
    for l in pt.ladders() {
        val *= qpoch_skip(l.base * pt.t / x, pt.q, n, None) / qpoch_skip(l.base / x, pt.q, n, None);
    }
    Ok(val)
}

/// Residue of `ψ Φ dx/x` at `x_0 = ladders[which] · q^m`.
fn residue(
    sel: Selector,
    pt: &NumericPoint,
    ladders: &[PoleLadder],
    which: usize,
    m: usize,
) -> Complex64 {
    let x0 = ladders[which].point(pt.q, m);
    let n = pt.prod_trunc.max(m + 1);
    let mut val = x0.powi(pt.lambda as i32) * psi_value(sel, x0, pt);
    for (idx, l) in ladders.iter().enumerate() {
        let skip = (idx == which).then_some(m);
        val *=
            qpoch_skip(l.base * pt.t / x0, pt.q, n, None) / qpoch_skip(l.base / x0, pt.q, n, skip);
    }
    val
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BracketValue {
    pub value: Complex64,
    pub converged: bool,
    pub terms_used: usize,
}

/// `⟨ψ⟩`: the residue sum over every ladder, each cut off once three
/// consecutive terms fall below `1e-16` of its running sum.
pub fn bracket(sel: Selector, pt: &NumericPoint) -> Result<BracketValue, QintegralError> {
    check_selector(sel, pt.rank())?;
    let (sel, pt) = resolve(sel, pt)?;
    let ladders = pt.ladders();
    let per_ladder: Vec<(Complex64, bool, usize)> = (0..ladders.len())
        .into_par_iter()
        .map(|which| {
            let mut sum = Complex64::new(0.0, 0.0);
            let mut small = 0;
            for m in 0..pt.ladder_trunc {
                let term = residue(sel, &pt, &ladders, which, m);
                sum += term;
                if term.norm() <= TRUNCATION_EPS * sum.norm() {
                    small += 1;
                    if small == 3 {
                        return (sum, true, m + 1);
                    }
                } else {
                    small = 0;
                }
            }
            (sum, false, pt.ladder_trunc)
        })
        .collect();
    Ok(BracketValue {
        value: per_ladder.iter().map(|p| p.0).sum(),
        converged: per_ladder.iter().all(|p| p.1),
        terms_used: per_ladder.iter().map(|p| p.2).sum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn pt1() -> NumericPoint {
        NumericPoint::new(0.3, 0.7, vec![c(0.9)], 1).unwrap()
    }

    #[test]
    fn integrand_at_t_one_is_power() {
        // t = 1 is rejected as a bracket point, so build it by hand
        let mut pt = pt1();
        pt.t = 1.0;
        let x = Complex64::new(0.7, 0.4);
        let v = integrand(x, Selector::One, &pt).unwrap();
        assert!((v - x.powi(pt.lambda as i32) / x).norm() < 1e-14);
    }

    #[test]
    fn phi_one_cancels_against_phi_factor() {
        let pt = pt1();
        let x = Complex64::new(0.5, 0.8);
        let direct = integrand(x, Selector::Phi(1), &pt).unwrap();
        let tb = pt.y[0].inv() * pt.t;
        let stripped = x.powi(1) / x * qpoch_skip(pt.y[0] * pt.t / x, pt.q, pt.prod_trunc, None)
            / qpoch_skip(pt.y[0] / x, pt.q, pt.prod_trunc, None)
            * qpoch_skip(tb / x, pt.q, pt.prod_trunc, Some(0))
            / qpoch_skip(pt.y[0].inv() / x, pt.q, pt.prod_trunc, None);
        assert!((direct - stripped).norm() < 1e-12 * direct.norm());
    }

    #[test]
    fn integrand_stable_in_truncation() {
        let pt = pt1();
        let x = Complex64::new(0.6, -0.2);
        let a = integrand(x, Selector::One, &pt).unwrap();
        let longer = pt
            .clone()
            .with_truncation(pt.prod_trunc + 10, pt.ladder_trunc);
        let b = integrand(x, Selector::One, &longer).unwrap();
        assert!((a - b).norm() < 1e-14 * a.norm());
    }

    #[test]
    fn bracket_stable_in_truncation() {
        let pt = pt1();
        let a = bracket(Selector::One, &pt).unwrap();
        assert!(a.converged);
        let longer = pt
            .clone()
            .with_truncation(pt.prod_trunc + 10, pt.ladder_trunc + 10);
        let b = bracket(Selector::One, &longer).unwrap();
        assert!((a.value - b.value).norm() < 1e-10 * a.value.norm());
    }

    #[test]
    fn numerator_zero_kills_residue() {
        let pt = NumericPoint::new(0.3, 0.7, vec![c(0.9), c(1.3)], 1).unwrap();
        let ladders = pt.ladders();
        // ladder 2 is y_1^{-1}; φ_2 has the factor (1 − y_1^{-1}/x)
        let r = residue(Selector::Phi(2), &pt, &ladders, 2, 0);
        assert!(r.norm() < 1e-12);
    }

    #[test]
    fn near_pole_is_an_error() {
        let pt = pt1();
        assert!(integrand(pt.y[0], Selector::One, &pt).is_err());
        assert!(bracket(Selector::Phi(3), &pt).is_err());
    }
}
