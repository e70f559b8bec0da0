//! The Weyl group `W(C_n)` as signed permutations, its action on the
//! `y`-generators, the affine reflection `s_0`, and coset representatives
//! of `W / W_{ε_1}`.

pub mod perm;
pub mod roots;

pub use perm::{word_string, SignedPerm};
pub use roots::{
    all_roots, coroot_pairing, dominance_less, dominant_rep, epsilon, highest_root, is_partition,
    is_positive, orbit, orbit_sum, positive_roots, reflect, reflection, simple_root, AffineRoot,
    Weight,
};

use thiserror::Error;

use crate::ring::{int, Ambient, Gen, LaurentPoly, RatFunc, RingError, Substitution};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WeylError {
    #[error("reflection index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("{0:?} is not a signed permutation")]
    NotSignedPermutation(Vec<i32>),
    #[error("{0:?} is not a root of C_n")]
    NotARoot(Vec<i32>),
    #[error("{0:?} is not a partition")]
    NotPartition(Vec<i32>),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Reduced words of the coset representatives `w_1, …, w_{2n}`:
/// `w_1 = e`, `w_{k+1} = s_k ⋯ s_1`, `w_{n+k+1} = s_{n−k} ⋯ s_{n−1} w_{n+1}`.
pub fn coset_words(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 1..=n {
        out.push((1..=k).rev().collect());
    }
    let top: Vec<usize> = (1..=n).rev().collect();
    for k in 1..n {
        let mut w: Vec<usize> = (n - k..n).collect();
        w.extend_from_slice(&top);
        out.push(w);
    }
    out
}

/// `w_1, …, w_{2n}` with `w_i(ε_1) = ε_i` for `i ≤ n` and
/// `w_{n+i}(ε_1) = −ε_{n−i+1}`.
pub fn coset_reps(n: usize) -> Vec<SignedPerm> {
    coset_words(n)
        .iter()
        .map(|w| SignedPerm::from_word(w, n).expect("valid word"))
        .collect()
}

/// Index `k` (1-based) of the coset `w_k W_{ε_1}` containing `w`, read off
/// from `w(ε_1)`.
pub fn coset_index(w: &SignedPerm) -> usize {
    let n = w.rank();
    let s = w.image_of(1);
    if s > 0 {
        s as usize
    } else {
        2 * n + 1 - s.unsigned_abs() as usize
    }
}

/// Word for `g = s_n (s_{n−1} s_n) ⋯ (s_1 ⋯ s_n)`, which sends `ε_i` to
/// `−ε_{n−i+1}`.
pub fn longest_word(n: usize) -> Vec<usize> {
    let mut w = Vec::new();
    for start in (1..=n).rev() {
        w.extend(start..=n);
    }
    w
}

/// Substitution `y_i ↦ y^{w(ε_i)}`; `v, u, x` fixed.
pub fn substitution(w: &SignedPerm) -> Substitution {
    let n = w.rank();
    let r = Ambient::new(n);
    let mut sub = Substitution::identity(n);
    for i in 1..=n {
        let s = w.image_of(i);
        let j = s.unsigned_abs() as usize;
        sub = sub.with(Gen::Y(i), int(1), r.exps(&[(Gen::Y(j), s.signum())]));
    }
    sub
}

/// The affine reflection `s_0`: `y_1 ↦ q y_1^{-1}`, other generators fixed.
pub fn s0_substitution(n: usize) -> Substitution {
    let r = Ambient::new(n);
    Substitution::identity(n).with(Gen::Y(1), int(1), r.exps(&[(Gen::V, 2), (Gen::Y(1), -1)]))
}

pub fn act_on_poly(w: &SignedPerm, p: &LaurentPoly) -> Result<LaurentPoly, WeylError> {
    if p.rank() != w.rank() {
        return Err(WeylError::RankMismatch {
            left: w.rank(),
            right: p.rank(),
        });
    }
    Ok(p.substitute(&substitution(w))?)
}

pub fn act_on_ratfunc(w: &SignedPerm, f: &RatFunc) -> Result<RatFunc, WeylError> {
    if f.rank() != w.rank() {
        return Err(WeylError::RankMismatch {
            left: w.rank(),
            right: f.rank(),
        });
    }
    Ok(f.substitute(&substitution(w))?)
}

pub fn act_s0(f: &RatFunc) -> Result<RatFunc, WeylError> {
    Ok(f.substitute(&s0_substitution(f.rank()))?)
}
