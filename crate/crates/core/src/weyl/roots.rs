//! The `C_n` root system, affine roots, dominance order, and orbit sums.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{SignedPerm, WeylError};
use crate::ring::{Ambient, LaurentPoly};

/// Integer vector in ε-coordinates.
pub type Weight = Vec<i32>;

/// `α + mδ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AffineRoot {
    pub root: Weight,
    pub m: i32,
}

impl AffineRoot {
    pub fn new(root: Weight, m: i32) -> Result<Self, WeylError> {
        if !is_root(&root) {
            return Err(WeylError::NotARoot(root));
        }
        Ok(AffineRoot { root, m })
    }

    /// A finite root (`m = 0`).
    pub fn finite(root: Weight) -> Result<Self, WeylError> {
        Self::new(root, 0)
    }

    pub fn rank(&self) -> usize {
        self.root.len()
    }

    pub fn neg(&self) -> Self {
        AffineRoot {
            root: self.root.iter().map(|c| -c).collect(),
            m: -self.m,
        }
    }

    /// True for `±2ε_i`.
    pub fn is_long(&self) -> bool {
        is_long(&self.root)
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.root.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if parts.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                parts.push(format!("{sign}e{}", i + 1));
            } else {
                parts.push(format!("{sign}{mag}e{}", i + 1));
            }
        }
        let mut s = parts.concat();
        match self.m {
            0 => {}
            1 => s.push_str("+d"),
            -1 => s.push_str("-d"),
            m if m > 0 => s.push_str(&format!("+{m}d")),
            m => s.push_str(&format!("{m}d")),
        }
        f.write_str(&s)
    }
}

/// `±ε_i±ε_j (i<j)` or `±2ε_i`.
pub fn is_root(v: &[i32]) -> bool {
    let nz: Vec<i32> = v.iter().copied().filter(|&c| c != 0).collect();
    match nz.as_slice() {
        [a] => a.abs() == 2,
        [a, b] => a.abs() == 1 && b.abs() == 1,
        _ => false,
    }
}

pub fn is_long(v: &[i32]) -> bool {
    v.iter().any(|c| c.abs() == 2)
}

/// First nonzero coordinate positive.
pub fn is_positive(v: &[i32]) -> bool {
    v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

/// `ε_i` as a weight (1-based).
pub fn epsilon(i: usize, n: usize) -> Weight {
    let mut v = vec![0; n];
    v[i - 1] = 1;
    v
}

/// `a ε_i + b ε_j` as a weight.
pub fn combo(n: usize, terms: &[(i32, usize)]) -> Weight {
    let mut v = vec![0; n];
    for &(c, i) in terms {
        v[i - 1] += c;
    }
    v
}

/// `α_i = ε_i − ε_{i+1}` for `i < n`, `α_n = 2ε_n`.
pub fn simple_root(i: usize, n: usize) -> Result<Weight, WeylError> {
    if i == 0 || i > n {
        return Err(WeylError::IndexOutOfRange { index: i, rank: n });
    }
    Ok(if i < n {
        combo(n, &[(1, i), (-1, i + 1)])
    } else {
        combo(n, &[(2, n)])
    })
}

/// `θ = 2ε_1`.
pub fn highest_root(n: usize) -> Weight {
    combo(n, &[(2, 1)])
}

/// All `2n^2` roots of `C_n`.
pub fn all_roots(n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(combo(n, &[(a, i), (b, j)]));
            }
        }
        out.push(combo(n, &[(2, i)]));
        out.push(combo(n, &[(-2, i)]));
    }
    out
}

pub fn positive_roots(n: usize) -> Vec<Weight> {
    all_roots(n)
        .into_iter()
        .filter(|r| is_positive(r))
        .collect()
}

/// `⟨x, α^∨⟩` with `α^∨ = 2α/(α,α)`.
pub fn coroot_pairing(x: &[i32], alpha: &[i32]) -> i32 {
    let dot: i32 = x.iter().zip(alpha).map(|(a, b)| a * b).sum();
    if is_long(alpha) {
        dot / 2
    } else {
        dot
    }
}

/// `s_α(x) = x − ⟨x, α^∨⟩ α`.
pub fn reflect(alpha: &[i32], x: &[i32]) -> Weight {
    let k = coroot_pairing(x, alpha);
    x.iter().zip(alpha).map(|(a, b)| a - k * b).collect()
}

/// The reflection `s_α` as a signed permutation.
pub fn reflection(alpha: &[i32]) -> Result<SignedPerm, WeylError> {
    if !is_root(alpha) {
        return Err(WeylError::NotARoot(alpha.to_vec()));
    }
    let n = alpha.len();
    let images = (1..=n)
        .map(|i| {
            let img = reflect(alpha, &epsilon(i, n));
            let j = img.iter().position(|&c| c != 0).unwrap();
            img[j] * (j as i32 + 1)
        })
        .collect();
    SignedPerm::from_images(images)
}

/// `ν ≤ μ` in dominance order: `μ − ν` is a nonnegative integer combination
/// of simple roots. Coefficients come from the triangular system
/// `c_k = d_1+⋯+d_k (k<n)`, `c_n = (d_1+⋯+d_n)/2`.
pub fn dominance_less(nu: &[i32], mu: &[i32]) -> Result<bool, WeylError> {
    if nu.len() != mu.len() {
        return Err(WeylError::RankMismatch {
            left: nu.len(),
            right: mu.len(),
        });
    }
    let n = mu.len();
    let mut partial = 0;
    for k in 0..n {
        partial += mu[k] - nu[k];
        let ok = if k + 1 < n {
            partial >= 0
        } else {
            partial >= 0 && partial % 2 == 0
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_partition(mu: &[i32]) -> bool {
    mu.iter().all(|&c| c >= 0) && mu.windows(2).all(|w| w[0] >= w[1])
}

/// The dominant representative of the orbit of `v`: absolute values sorted
/// in decreasing order.
pub fn dominant_rep(v: &[i32]) -> Weight {
    let mut out: Weight = v.iter().map(|c| c.abs()).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Distinct elements of the orbit `Wμ`.
pub fn orbit(mu: &[i32]) -> BTreeSet<Weight> {
    let mut base: Weight = dominant_rep(mu);
    base.sort_unstable();
    let mut out = BTreeSet::new();
    loop {
        let nonzero: Vec<usize> = (0..base.len()).filter(|&i| base[i] != 0).collect();
        for signs in 0u32..(1 << nonzero.len()) {
            let mut v = base.clone();
            for (k, &i) in nonzero.iter().enumerate() {
                if signs >> k & 1 == 1 {
                    v[i] = -v[i];
                }
            }
            out.insert(v);
        }
        if !next_permutation(&mut base) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [i32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `m_μ = Σ_{ν ∈ Wμ} y^ν`.
pub fn orbit_sum(mu: &[i32], n: usize) -> Result<LaurentPoly, WeylError> {
    if mu.len() != n {
        return Err(WeylError::RankMismatch {
            left: n,
            right: mu.len(),
        });
    }
    if !is_partition(mu) {
        return Err(WeylError::NotPartition(mu.to_vec()));
    }
    let r = Ambient::new(n);
    let mut out = r.zero();
    for nu in orbit(mu) {
        out = &out + &r.y_weight(&nu);
    }
    Ok(out)
}
