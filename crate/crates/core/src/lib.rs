//! Exact computations in the center of the category of `A`-bimodules.
//!
//! For a finite-dimensional algebra `A` over ℚ or 𝔽_p the crate represents
//! comodules over the Sweedler coring `A ⊗ A`, Yetter–Drinfeld `Aᵉ`-modules,
//! noncommutative descent data and left `End_k(A)`-modules as explicit
//! matrices, converts between these descriptions, builds the braided monoidal
//! structure (tensor product over `A`, braiding, inverse braiding) and derives
//! solutions of the quantum Yang–Baxter equation from it. Every identity is
//! checked by exact matrix equality.
//!
//! Modules:
//! - [`exactla`]: scalars, dense matrices, row reduction.
//! - [`algebra`]: structure-constant algebras, dual bases.
//! - [`modules`]: bimodules, coactions, descent data and the converters between them.
//! - [`braided`]: `⊗_A`, braidings, hexagon/naturality/unit checks, `End_k(A)`-modules.
//! - [`ybe`]: Yang–Baxter operators from comodules, grouplikes and R-matrices.
//! - [`suite`]: the end-to-end verification suite used by the CLI.

pub mod algebra;
pub mod braided;
pub mod error;
pub mod exactla;
pub mod exec;
pub mod io;
pub mod modules;
pub mod report;
pub mod suite;
pub mod ybe;

pub use error::{Error, Result};
pub use exactla::{Field, Matrix, Scalar};
pub use exec::Exec;
pub use report::{Check, Report, Witness};
