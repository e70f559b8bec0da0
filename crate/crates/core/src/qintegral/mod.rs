//! Numerical evaluation of `⟨ψ⟩ = ∫_C ψ Φ` as a truncated sum of residues
//! over the pole ladders `y_j^{±1} q^m`, and the integral-level checks built
//! on it: the `s_0` relations, the QKZ equations, the Macdonald ratio test
//! and the weighted-sum identity.

pub mod bracket;
pub mod checks;
pub mod point;

pub use bracket::{bracket, integrand, phi_numeric, BracketValue, Selector};
pub use checks::{
    psi_vector, random_point, ratio_test_macdonald, verify_bracket_sum, verify_qkz,
    verify_s0_fixed, verify_s0_relations,
};
pub use point::{qpoch_inf, NumericPoint, PoleLadder};

use thiserror::Error;

use crate::macdonald::MacdonaldError;
use crate::ring::RingError;
use crate::rmatrix::RmatrixError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QintegralError {
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("non-generic point: {0}")]
    NonGeneric(String),
    #[error("x = {0} is within tolerance of a pole")]
    NearPole(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Rmatrix(#[from] RmatrixError),
    #[error(transparent)]
    Macdonald(#[from] MacdonaldError),
}
