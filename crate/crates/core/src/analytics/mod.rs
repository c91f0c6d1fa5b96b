//! Closed-form solutions, asymptotes and appendix integrals.
//!
//! Each function here is also used as a test oracle for the numerical
//! modules. Closed forms valid only in a limit return an [`Estimate`] that
//! carries a warning when the inputs leave that limit.

mod appendix;
mod bessel;
mod lz;
mod rotation;

pub use appendix::{appendix_integrals, AppendixIntegrals, IntegralPair};
pub use bessel::{k0_large_x, k0_small_x, modified_bessel_k0, EULER_GAMMA};
pub use lz::{
    lindblad_lz_p, lz_finite_t_p, lz_ideal_probability, lz_longitudinal_p, lz_power_law, lz_zero_t_p_inf, lz_zero_t_suppression, r_function,
    renormalized_gap, strong_coupling_decay, FiniteTMethod, LongitudinalMethod, Suppression,
};
pub use rotation::{
    berry_curvature, berry_phase_half_sphere, closed_form_my, ground_state_my, lindblad_rotation_forms,
    steady_state_my, LindbladRotationForms,
};

use serde::{Deserialize, Serialize};

/// Value of an asymptotic formula with any validity warnings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub warnings: Vec<String>,
}

impl Estimate {
    pub(crate) fn new(value: f64) -> Self {
        Estimate { value, warnings: Vec::new() }
    }

    pub(crate) fn warn_if(mut self, violated: bool, message: impl FnOnce() -> String) -> Self {
        if violated {
            self.warnings.push(message());
        }
        self
    }

    pub fn is_valid(&self) -> bool {
        self.warnings.is_empty()
    }
}
