use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),
    /// A state or parameter set violates its invariants.
    #[error("validation error: {0}")]
    Validation(String),
    /// Incompatible options (unknown mode/scenario pairing, bad window, ...).
    #[error("configuration error: {0}")]
    Config(String),
    /// The integrator gave up.
    #[error(transparent)]
    Solver(#[from] SolverError),
    /// The oscillator Fock space is too small for the requested run.
    #[error("Fock truncation leak: top level holds {population:.3e} at n_fock = {n_fock}; increase n_fock")]
    Truncation { n_fock: usize, population: f64 },
}

/// Integrator failures, each carrying the time at which it happened.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("step size underflow at t = {t} (problem too stiff for an explicit method)")]
    StepUnderflow { t: f64 },
    #[error("step budget of {max_steps} exhausted at t = {t}")]
    MaxSteps { t: f64, max_steps: usize },
    #[error("non-finite state at t = {t}")]
    NonFinite { t: f64 },
    #[error("step observer rejected the state at t = {t}: {reason}")]
    Observer { t: f64, reason: String },
}

impl SolverError {
    /// Time at which the failure occurred.
    pub fn time(&self) -> f64 {
        match *self {
            SolverError::StepUnderflow { t }
            | SolverError::MaxSteps { t, .. }
            | SolverError::NonFinite { t }
            | SolverError::Observer { t, .. } => t,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
