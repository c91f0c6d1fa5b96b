//! Qubit density matrices and their Bloch-vector view.

use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type Mat2 = Matrix2<C64>;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

pub const TRACE_TOL: f64 = 1e-9;
pub const HERMITICITY_TOL: f64 = 1e-12;
pub const NORM_TOL: f64 = 1e-6;

pub fn sigma_x() -> Mat2 {
    Mat2::new(ZERO, ONE, ONE, ZERO)
}

pub fn sigma_y() -> Mat2 {
    Mat2::new(ZERO, -I, I, ZERO)
}

pub fn sigma_z() -> Mat2 {
    Mat2::new(ONE, ZERO, ZERO, -ONE)
}

/// `[σx, σy, σz]`.
pub fn paulis() -> [Mat2; 3] {
    [sigma_x(), sigma_y(), sigma_z()]
}

/// Largest `|A_ij - conj(A_ji)|`.
pub fn hermiticity_error(a: &Mat2) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            worst = worst.max((a[(i, j)] - a[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Components `Re Tr(σ_i A)/2` of a Hermitian 2×2 matrix on the Pauli basis.
pub fn pauli_components(a: &Mat2) -> [f64; 3] {
    paulis().map(|s| (s * a).trace().re / 2.0)
}

/// Density matrix of a qubit.
///
/// Index 0 is the state with `σz = +1`. In every frame used by this crate
/// that is the lower level, so `m_z = 1` means ground state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    rho: Mat2,
}

impl QubitState {
    /// Wraps `rho` after checking trace, Hermiticity and `|m| <= 1`.
    pub fn new(rho: Mat2) -> Result<Self> {
        let trace = rho.trace();
        if (trace - ONE).norm() > TRACE_TOL {
            return Err(Error::Validation(format!("trace {trace} differs from 1")));
        }
        let herm = hermiticity_error(&rho);
        if herm > HERMITICITY_TOL {
            return Err(Error::Validation(format!("matrix not Hermitian (deviation {herm:.3e})")));
        }
        let state = QubitState { rho };
        let m = state.bloch();
        let norm = (m[0] * m[0] + m[1] * m[1] + m[2] * m[2]).sqrt();
        if norm > 1.0 + NORM_TOL {
            return Err(Error::Validation(format!("Bloch vector length {norm} exceeds 1")));
        }
        Ok(state)
    }

    /// Skips validation; used for integrator output whose invariants are
    /// tracked separately.
    pub(crate) fn from_matrix_unchecked(rho: Mat2) -> Self {
        QubitState { rho }
    }

    pub fn from_bloch(m: [f64; 3]) -> Result<Self> {
        let norm = (m[0] * m[0] + m[1] * m[1] + m[2] * m[2]).sqrt();
        if !(norm <= 1.0 + NORM_TOL) {
            return Err(Error::Validation(format!("Bloch vector length {norm} exceeds 1")));
        }
        Ok(QubitState { rho: bloch_to_matrix(m) })
    }

    /// `|0><0|`.
    pub fn ground() -> Self {
        QubitState { rho: Mat2::new(ONE, ZERO, ZERO, ZERO) }
    }

    /// Thermal state `(1 + tanh(gap/2T) σz)/2`.
    pub fn thermal(gap: f64, temperature: f64) -> Self {
        let m0 = thermal_polarization(gap, temperature);
        QubitState { rho: bloch_to_matrix([0.0, 0.0, m0]) }
    }

    pub fn rho(&self) -> &Mat2 {
        &self.rho
    }

    /// `m_i = Tr(σ_i ρ)`.
    pub fn bloch(&self) -> [f64; 3] {
        let r = &self.rho;
        [2.0 * r[(0, 1)].re, -2.0 * r[(0, 1)].im, (r[(0, 0)] - r[(1, 1)]).re]
    }

    /// Population of index 1 (the upper level of the frame).
    pub fn excited_population(&self) -> f64 {
        self.rho[(1, 1)].re
    }

    pub fn purity(&self) -> f64 {
        (self.rho * self.rho).trace().re
    }

    pub fn trace_error(&self) -> f64 {
        (self.rho.trace() - ONE).norm()
    }

    pub fn hermiticity_error(&self) -> f64 {
        hermiticity_error(&self.rho)
    }

    /// `U ρ U†`.
    pub fn conjugated(&self, u: &Mat2) -> Self {
        QubitState { rho: u * self.rho * u.adjoint() }
    }
}

/// `tanh(gap/2T)`, equal to 1 at `T = 0`.
pub fn thermal_polarization(gap: f64, temperature: f64) -> f64 {
    if temperature == 0.0 {
        1.0
    } else {
        (gap / (2.0 * temperature)).tanh()
    }
}

pub(crate) fn bloch_to_matrix(m: [f64; 3]) -> Mat2 {
    let half = 0.5;
    Mat2::new(
        C64::new(half * (1.0 + m[2]), 0.0),
        C64::new(half * m[0], -half * m[1]),
        C64::new(half * m[0], half * m[1]),
        C64::new(half * (1.0 - m[2]), 0.0),
    )
}

/// Validating conversion `ρ -> m`.
pub fn bloch_of_density(rho: &Mat2) -> Result<[f64; 3]> {
    Ok(QubitState::new(*rho)?.bloch())
}

/// Validating conversion `m -> ρ`.
pub fn density_of_bloch(m: [f64; 3]) -> Result<QubitState> {
    QubitState::from_bloch(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn conversion_examples() {
        let up = Mat2::new(ONE, ZERO, ZERO, ZERO);
        assert_eq!(bloch_of_density(&up).unwrap(), [0.0, 0.0, 1.0]);

        let mixed = density_of_bloch([0.0; 3]).unwrap();
        assert_eq!(*mixed.rho(), Mat2::identity() * c(0.5));

        let plus = density_of_bloch([1.0, 0.0, 0.0]).unwrap();
        assert_eq!(plus.rho()[(0, 1)], c(0.5));
        assert_eq!(plus.rho()[(1, 0)], c(0.5));
    }

    #[test]
    fn bloch_matches_pauli_traces() {
        let s = density_of_bloch([0.3, -0.4, 0.5]).unwrap();
        let m = s.bloch();
        for (k, sigma) in paulis().iter().enumerate() {
            assert!(((sigma * s.rho()).trace().re - m[k]).abs() < 1e-15);
        }
    }

    #[test]
    fn invalid_inputs_rejected() {
        let bad_trace = Mat2::new(ONE, ZERO, ZERO, ONE);
        assert!(bloch_of_density(&bad_trace).is_err());
        let non_herm = Mat2::new(c(0.5), c(0.2), c(0.1), c(0.5));
        assert!(bloch_of_density(&non_herm).is_err());
        assert!(density_of_bloch([1.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn thermal_state_polarization() {
        assert_eq!(QubitState::thermal(1.0, 0.0).bloch(), [0.0, 0.0, 1.0]);
        let m = QubitState::thermal(1.0, 1.0).bloch();
        assert!((m[2] - 0.5f64.tanh()).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn round_trip(theta in 0.0f64..std::f64::consts::PI, phi in 0.0f64..6.3, r in 0.0f64..1.0) {
            let m = [r * theta.sin() * phi.cos(), r * theta.sin() * phi.sin(), r * theta.cos()];
            let back = bloch_of_density(density_of_bloch(m).unwrap().rho()).unwrap();
            for k in 0..3 {
                prop_assert!((back[k] - m[k]).abs() < 1e-14);
            }
        }
    }
}
