//! Dissipative qubit dynamics under slowly varying control fields.
//!
//! Bloch–Redfield propagation in rotated frames, Landau–Zener sweeps with an
//! Ohmic bath, a Lindblad dephasing model, a qubit coupled to a damped
//! oscillator, and the closed forms used to check all of them.
//!
//! Units: `ħ = 1`, energies in units of the gap `Δ`, times in `1/Δ`.

/// Library version, echoed in output files.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod analytics;
pub mod bath;
pub mod checks;
pub mod coupling;
pub mod dynamics;
pub mod error;
pub mod frames;
pub mod ode;
pub mod oscillator;
pub mod quad;
pub mod rates;
pub mod state;

pub use bath::{ohmic_spectral_density, planck_occupation, BathSpec, Cutoff};
pub use coupling::{CouplingMode, CouplingSpec};
pub use dynamics::{
    change_basis, evolve_br_lz, evolve_br_secular, evolve_lindblad_dephasing, evolve_rate_equation, evolve_rotating_br,
    lab_frame_observables, LindbladScenario, Observables, StepDiagnostics, Trajectory,
};
pub use error::{Error, Result, SolverError};
pub use frames::{
    effective_hamiltonian, lz_frame, rotating_frame, transformed_coupling, Basis, FrameAngles, FrameProvider,
    LzParams, RotatingFieldParams, Scenario,
};
pub use ode::{Method, SolverConfig};
pub use oscillator::{evolve_joint, reduce_to_qubit, JointState, OscillatorModel};
pub use rates::{lz_rates, rate_equation_coefficient, rotating_rates, static_rates, CutoffTreatment, LzCoupling, RateSet};
pub use state::{bloch_of_density, density_of_bloch, QubitState};

/// Examples from the guide in `book/`, compiled as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rates.md")]
    mod rates {}
    #[doc = include_str!("../../../book/src/rotating-field.md")]
    mod rotating_field {}
    #[doc = include_str!("../../../book/src/landau-zener.md")]
    mod landau_zener {}
    #[doc = include_str!("../../../book/src/lindblad.md")]
    mod lindblad {}
    #[doc = include_str!("../../../book/src/oscillator.md")]
    mod oscillator {}
    #[doc = include_str!("../../../book/src/checks.md")]
    mod checks {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
