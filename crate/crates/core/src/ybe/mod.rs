//! Solutions of the quantum Yang–Baxter equation built from comodules,
//! grouplike elements and R-matrices, with exact verifiers.
//!
//! Operators act on `V ⊗ V` with `e_p ⊗ e_q` at index `p·m + q`. On `V^{⊗3}`,
//! `Ω¹² = Ω ⊗ I`, `Ω²³ = I ⊗ Ω` and `Ω¹³ = P₂₃ Ω¹² P₂₃`, where `P₂₃` sends
//! `e_a ⊗ e_b ⊗ e_c` (index `(a·m + b)·m + c`) to `e_a ⊗ e_c ⊗ e_b`.

mod grouplike;
mod operator;
mod rmatrix;

pub use grouplike::{
    coinvariant_subalgebra, coinvariants, induced_comodule, induced_operator, induced_over_k, verify_grouplike,
    verify_induced, Grouplike, InducedComodule,
};
pub use operator::{
    embeddings, omega_cubed_check, omega_from_comodule, omega_from_yd, qybe, qybe_check, qybe_check_with, Provenance,
    YangBaxterOperator,
};
pub use rmatrix::{comodule_from_rmatrix, omega_r, verify_rmatrix, RMatrix};

pub mod conditions {
    pub use super::grouplike::condition as grouplike;
    pub use super::rmatrix::condition as rmatrix;
}
