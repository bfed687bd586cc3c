//! The braided monoidal category of comodules: tensor products over `A`,
//! braidings, and their transport to modules over `End_k(A)`.

mod end_module;
mod morphism;
mod quotient;
mod tensor;

pub use end_module::{
    comodule_from_end_module, end_action, end_action_on_tensor, end_module_from_comodule, flip_on_quotient,
    transported_braiding, EndModule,
};
pub use morphism::{naturality, naturality_check, verify_morphism, ComoduleMorphism};
pub use quotient::TensorQuotient;
pub use tensor::{
    associator, braid_against, braiding, braiding_between, braiding_inverse, braiding_inverse_between, hexagon,
    hexagon_check, hexagon_check_with, tensor_over_a, unit_check, Associator, HalfBraiding, TensorOverA,
};
