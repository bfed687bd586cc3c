//! Bimodules, comodules over the coring `A⊗A`, Yetter–Drinfeld modules and
//! descent data, with converters between them.

mod adjunction;
mod bimodule;
mod coaction;
mod descent;

pub use adjunction::{counit_eps, descent_f, descent_f_map, descent_g, is_bijective, unit_eta};
pub use bimodule::Bimodule;
pub use coaction::{
    axiom, comodule_from_yd, swap_counit_check, verify_comodule, with_induced_left, yd_from_comodule, Coaction,
};
pub use descent::{
    coaction_of, condition, counit_from_invertibility, descent_from_yd, g_inverse, lift_g, verify_descent,
    yd_from_descent, DescentDatum,
};

pub(crate) use bimodule::{verify_action, Side};
