//! Signed permutations: the hyperoctahedral group `W(C_n)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::WeylError;

/// `images[i] = ±j` means `ε_{i+1} ↦ ±ε_j` (indices 1-based in the value).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedPerm {
    images: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn from_images(images: Vec<i32>) -> Result<Self, WeylError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &s in &images {
            let j = s.unsigned_abs() as usize;
            if j == 0 || j > n || seen[j - 1] {
                return Err(WeylError::NotSignedPermutation(images.clone()));
            }
            seen[j - 1] = true;
        }
        Ok(SignedPerm { images })
    }

    /// `s_i`: swaps `ε_i, ε_{i+1}` for `i < n`, negates `ε_n` for `i = n`.
    pub fn simple_reflection(i: usize, n: usize) -> Result<Self, WeylError> {
        if i == 0 || i > n {
            return Err(WeylError::IndexOutOfRange { index: i, rank: n });
        }
        let mut images: Vec<i32> = (1..=n as i32).collect();
        if i < n {
            images.swap(i - 1, i);
        } else {
            images[n - 1] = -(n as i32);
        }
        Ok(SignedPerm { images })
    }

    /// The product `s_{w[0]} s_{w[1]} ⋯` (rightmost acts first).
    pub fn from_word(word: &[usize], n: usize) -> Result<Self, WeylError> {
        let mut out = SignedPerm::identity(n);
        for &i in word {
            out = out.compose(&SignedPerm::simple_reflection(i, n)?)?;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &s)| s == i as i32 + 1)
    }

    /// `(self ∘ other)(ε_i) = self(other(ε_i))`.
    pub fn compose(&self, other: &Self) -> Result<Self, WeylError> {
        if self.rank() != other.rank() {
            return Err(WeylError::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|&s| {
                let img = self.images[s.unsigned_abs() as usize - 1];
                if s < 0 {
                    -img
                } else {
                    img
                }
            })
            .collect();
        Ok(SignedPerm { images })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.rank()];
        for (i, &s) in self.images.iter().enumerate() {
            let j = s.unsigned_abs() as usize - 1;
            images[j] = if s < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPerm { images }
    }

    /// `w(λ)` for a weight in ε-coordinates.
    pub fn apply(&self, weight: &[i32]) -> Result<Vec<i32>, WeylError> {
        if weight.len() != self.rank() {
            return Err(WeylError::RankMismatch {
                left: self.rank(),
                right: weight.len(),
            });
        }
        let mut out = vec![0; self.rank()];
        for (i, &s) in self.images.iter().enumerate() {
            let j = s.unsigned_abs() as usize - 1;
            out[j] += s.signum() * weight[i];
        }
        Ok(out)
    }

    /// Image of `ε_i` (1-based) as a signed index.
    pub fn image_of(&self, i: usize) -> i32 {
        self.images[i - 1]
    }

    /// All `2^n n!` elements, in a fixed order.
    pub fn enumerate(n: usize) -> Vec<SignedPerm> {
        let mut out = Vec::new();
        for perm in permutations(n) {
            for signs in 0u32..(1 << n) {
                let images = perm
                    .iter()
                    .enumerate()
                    .map(|(k, &j)| {
                        if signs >> k & 1 == 1 {
                            -(j as i32)
                        } else {
                            j as i32
                        }
                    })
                    .collect();
                out.push(SignedPerm { images });
            }
        }
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out.sort();
    out
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Renders a reduced word as `s1*s2*s1`; the empty word is `e`.
pub fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter()
        .map(|i| format!("s{i}"))
        .collect::<Vec<_>>()
        .join("*")
}
