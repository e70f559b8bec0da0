//! The `φ` basis, the Weyl-action lemmas and partial-fraction identities it
//! satisfies, and the Lusztig operators acting on its span.

pub mod identities;
pub mod lusztig;
pub mod phi;

pub use identities::{
    psi_hat, verify_partial_fractions, verify_reflection_integrand, verify_si_action,
    verify_weighted_phi_identity,
};
pub use lusztig::{
    hecke_matrix, lusztig_t, lusztig_t_with, phi_coordinates, verify_hecke_relations,
    verify_lusztig_table, HeckeMatrix,
};
pub use phi::{common_denominator, phi, phi_entry, PhiBasis};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HeckeError {
    #[error("generator index {i} out of range for rank {n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("outside the phi span ({0})")]
    OutsideSpan(String),
}
