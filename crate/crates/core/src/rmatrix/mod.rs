//! R-matrices `R_{α+mδ}` on the full module and on the `2n`-dimensional
//! induced module, and the QKZ transport operators built from them.

pub mod coeffs;
pub mod full;
pub mod induced;
pub mod verify;

pub use coeffs::{r_coeffs, Perturbation, QkzParams, RCoeffs, TParam};
pub use full::{apply_product_full, apply_r_full, apply_rw, FullVec};
pub use induced::{
    apply_product_induced, apply_r_induced, embed, extract, qkz_transport, transport_roots,
    InducedMatrix, InducedVec, Translation,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RmatrixError {
    #[error("R[{root}] leaves the induced span (coset {coset} not constant)")]
    LeavesInducedSpan { root: String, coset: usize },
}
