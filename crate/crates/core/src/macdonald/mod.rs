//! The `C_n` Macdonald `q`-difference operator `E`, its eigenvalues, and the
//! closed-form one-row polynomial `P_{(λ,0,…,0)}`.

pub mod onerow;
pub mod operator;
pub mod sym;

pub use onerow::{
    compositions, macdonald_onerow, onerow_numerator, pochhammer, pochhammer_factors, verify_eigen,
    verify_triangularity,
};
pub use operator::{apply_e, eigenvalue_c, eigenvalue_c_sum};
pub use sym::SymLaurent;

pub use crate::qintegral::verify_bracket_sum;

use thiserror::Error;

use crate::ring::RingError;
use crate::weyl::WeylError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MacdonaldError {
    #[error("{0:?} is not a partition")]
    NotPartition(Vec<i32>),
    #[error("lambda must be positive")]
    ZeroLambda,
    #[error("expected a function of y alone")]
    NotInY,
    #[error("coefficient denominator must involve q and t only")]
    BadDenominator,
    #[error("not invariant under s{0}")]
    NotInvariant(usize),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
