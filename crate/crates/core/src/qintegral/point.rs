//! Evaluation points and the truncated infinite `q`-Pochhammer symbol.

use num_complex::Complex64;
use serde_json::{json, Value};

use super::QintegralError;

/// Ladder terms below this magnitude relative to the running sum are
/// treated as negligible.
pub const TRUNCATION_EPS: f64 = 1e-16;

/// `{base · q^m : m ≥ 0}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PoleLadder {
    pub base: Complex64,
}

impl PoleLadder {
    pub fn new(base: Complex64) -> Result<Self, QintegralError> {
        if base.norm() == 0.0 {
            return Err(QintegralError::BadParameter(
                "ladder base must be nonzero".into(),
            ));
        }
        Ok(PoleLadder { base })
    }

    pub fn point(&self, q: f64, m: usize) -> Complex64 {
        self.base * q.powi(m as i32)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericPoint {
    pub q: f64,
    pub t: f64,
    pub y: Vec<Complex64>,
    pub lambda: u32,
    /// Number of factors kept in `(a)_∞`.
    pub prod_trunc: usize,
    /// Maximum number of residues per ladder.
    pub ladder_trunc: usize,
    pub tol: f64,
}

impl NumericPoint {
    /// A point with the default truncations: `q^N < 1e-17` for the
    /// products, at most 400 residues per ladder, `tol = 1e-8`.
    pub fn new(q: f64, t: f64, y: Vec<Complex64>, lambda: u32) -> Result<Self, QintegralError> {
        if !(q > 0.0 && q < 1.0) {
            return Err(QintegralError::BadParameter(format!(
                "q = {q} must lie in (0, 1)"
            )));
        }
        if t.is_nan() || t <= 0.0 || !t.is_finite() {
            return Err(QintegralError::BadParameter(format!(
                "t = {t} must be positive"
            )));
        }
        if lambda == 0 {
            return Err(QintegralError::BadParameter(
                "lambda must be a positive integer".into(),
            ));
        }
        if y.is_empty() || y.iter().any(|z| z.norm() == 0.0 || !z.is_finite()) {
            return Err(QintegralError::BadParameter(
                "y must be nonzero and finite".into(),
            ));
        }
        let prod_trunc = ((1e-17f64).ln() / q.ln()).ceil() as usize + 1;
        let pt = NumericPoint {
            q,
            t,
            y,
            lambda,
            prod_trunc,
            ladder_trunc: 400,
            tol: 1e-8,
        };
        pt.check_generic()?;
        Ok(pt)
    }

    pub fn rank(&self) -> usize {
        self.y.len()
    }

    pub fn with_truncation(mut self, prod_trunc: usize, ladder_trunc: usize) -> Self {
        self.prod_trunc = prod_trunc;
        self.ladder_trunc = ladder_trunc;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    /// The same `q, t, λ` and truncations at a different `y`.
    pub fn at(&self, y: Vec<Complex64>) -> Result<Self, QintegralError> {
        let pt = NumericPoint { y, ..self.clone() };
        pt.check_generic()?;
        Ok(pt)
    }

    /// `y_1 ↦ q y_1^{-1}`: brackets at this point are the `s_0`-twisted
    /// brackets at `self`.
    pub fn s0_point(&self) -> Result<Self, QintegralError> {
        let mut y = self.y.clone();
        y[0] = self.q / y[0];
        self.at(y)
    }

    /// `y_i ↦ q y_i` (1-based).
    pub fn shifted(&self, i: usize) -> Result<Self, QintegralError> {
        let mut y = self.y.clone();
        y[i - 1] *= self.q;
        self.at(y)
    }

    /// `y_j ↦ q^{1/2} y_j` for all `j`.
    pub fn half_shifted(&self) -> Result<Self, QintegralError> {
        let s = self.q.sqrt();
        self.at(self.y.iter().map(|z| z * s).collect())
    }

    /// Ladder bases `y_1, …, y_n, y_1^{-1}, …, y_n^{-1}`.
    pub fn ladders(&self) -> Vec<PoleLadder> {
        self.y
            .iter()
            .copied()
            .chain(self.y.iter().map(|z| z.inv()))
            .map(|base| PoleLadder { base })
            .collect()
    }

    /// Number of ladder points whose magnitude is not yet negligible.
    fn relevant_depth(&self) -> usize {
        let depth = ((1e-18f64).ln() / self.q.ln()).ceil() as usize + 1;
        depth.min(self.ladder_trunc)
    }

    /// Ladder points pairwise distinct and away from the zeros
    /// `t · y_j^{±1} q^m`, with relative margin `1e-6`.
    pub fn check_generic(&self) -> Result<(), QintegralError> {
        let depth = self.relevant_depth();
        let mut pts = Vec::new();
        for l in self.ladders() {
            for m in 0..depth {
                pts.push(l.point(self.q, m));
            }
        }
        let close = |a: Complex64, b: Complex64| (a - b).norm() <= 1e-6 * a.norm().max(b.norm());
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                if close(a, b) {
                    return Err(QintegralError::NonGeneric(format!(
                        "ladder points collide near {a}"
                    )));
                }
            }
            for l in self.ladders() {
                for m in 0..depth {
                    let z = l.point(self.q, m) * self.t;
                    if close(a, z) {
                        return Err(QintegralError::NonGeneric(format!(
                            "pole {a} meets a zero t*y^(+-1)*q^{m}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "q": self.q,
            "t": self.t,
            "lambda": self.lambda,
            "y": self.y.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
        })
    }
}

/// `(a; q)_∞` truncated to `prod_trunc` factors.
pub fn qpoch_inf(a: Complex64, pt: &NumericPoint) -> Complex64 {
    qpoch_skip(a, pt.q, pt.prod_trunc, None)
}

/// `Π_{s<N, s≠skip} (1 − a q^s)`.
pub(crate) fn qpoch_skip(a: Complex64, q: f64, n: usize, skip: Option<usize>) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let mut acc = one;
    let mut qs = 1.0;
    for s in 0..n {
        if Some(s) != skip {
            acc *= one - a * qs;
        }
        qs *= q;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn pochhammer_examples() {
        let pt = NumericPoint::new(0.5, 0.7, vec![c(0.9)], 1).unwrap();
        assert_eq!(qpoch_inf(c(0.0), &pt), c(1.0));
        let v = qpoch_inf(c(0.5), &pt);
        assert!((v.re - 0.288_788_095_1).abs() < 1e-10);
        let a = Complex64::new(0.3, 0.4);
        let lhs = qpoch_inf(a, &pt);
        let rhs = (c(1.0) - a) * qpoch_inf(a * 0.5, &pt);
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(NumericPoint::new(1.0, 0.7, vec![c(0.9)], 1).is_err());
        assert!(NumericPoint::new(0.3, -1.0, vec![c(0.9)], 1).is_err());
        assert!(NumericPoint::new(0.3, 0.7, vec![c(0.9)], 0).is_err());
        assert!(PoleLadder::new(c(0.0)).is_err());
    }

    #[test]
    fn t_one_is_not_generic() {
        assert!(matches!(
            NumericPoint::new(0.3, 1.0, vec![c(0.9)], 1),
            Err(QintegralError::NonGeneric(_))
        ));
        // y_2 = q y_1 puts two ladders on top of each other
        assert!(NumericPoint::new(0.3, 0.7, vec![c(0.9), c(0.27)], 1).is_err());
    }
}
