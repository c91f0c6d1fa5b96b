use crate::bath::BathSpec;
use crate::coupling::CouplingMode;
use crate::error::{Error, Result};
use crate::frames::{rotating_frame, RotatingFieldParams};
use crate::rates::rotating_rates;
use crate::state::thermal_polarization;

/// Ground-state `m_y = -θ̇/√(Δ² + θ̇²)` of the adiabatic-frame Hamiltonian.
pub fn ground_state_my(theta_dot: f64, delta: f64) -> Result<f64> {
    if !(delta > 0.0) {
        return Err(Error::Domain(format!("delta must be > 0, got {delta}")));
    }
    Ok(-theta_dot / delta.hypot(theta_dot))
}

/// Berry curvature `1/(2Δ²)` of a spin-½ in a field of magnitude `Δ`.
pub fn berry_curvature(delta: f64) -> Result<f64> {
    if !(delta > 0.0) {
        return Err(Error::Domain(format!("delta must be > 0, got {delta}")));
    }
    Ok(0.5 / (delta * delta))
}

/// Flux of the curvature through a hemisphere of radius `Δ`.
pub fn berry_phase_half_sphere(delta: f64) -> Result<f64> {
    let area = 2.0 * std::f64::consts::PI * delta * delta;
    Ok(berry_curvature(delta)? * area)
}

/// Long-time `m_y = -(Ω/W) tanh(W/2T)`.
pub fn steady_state_my(p: &RotatingFieldParams, temperature: f64) -> f64 {
    let w = p.w_gap();
    -(p.omega / w) * thermal_polarization(w, temperature)
}

/// Lab `m_y(t)` for the perpendicular coupling, starting from the thermal state at `t = 0`:
///
/// `-m₀ sinη (1 - 2 sin²(η/2) e^{-Γt} - cosη e^{-Γt/2} cos Wt)`, `Γ = Γ_r + Γ_e`.
pub fn closed_form_my(t: f64, p: &RotatingFieldParams, bath: &BathSpec) -> Result<f64> {
    if bath.j0 != 0.0 {
        return Err(Error::Config("closed-form m_y assumes j0 = 0".into()));
    }
    if t < 0.0 {
        return Ok(0.0);
    }
    let f = rotating_frame(t, p);
    let gamma = rotating_rates(CouplingMode::PerpY, &f, bath)?.total_flip();
    let m0 = thermal_polarization(f.w_gap, bath.temperature);
    let (s, c) = f.eta.sin_cos();
    let half = (0.5 * f.eta).sin();
    Ok(-m0 * s * (1.0 - 2.0 * half * half * (-gamma * t).exp() - c * (-0.5 * gamma * t).exp() * (f.w_gap * t).cos()))
}

/// Lindblad dephasing under rotation: quasistationary `m_y` and the slow envelope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LindbladRotationForms {
    /// `-(Ω/2) Δ/(Δ² + γ²)`.
    pub quasistationary: f64,
    /// `2Ω²γ/(Ω² + Δ²)`.
    pub decay_rate: f64,
    /// `-Ω/W`.
    pub envelope_start: f64,
}

impl LindbladRotationForms {
    /// `-(Ω/W) exp(-rate·t)`.
    pub fn envelope(&self, t: f64) -> f64 {
        self.envelope_start * (-self.decay_rate * t).exp()
    }
}

pub fn lindblad_rotation_forms(delta: f64, omega: f64, gamma: f64) -> Result<LindbladRotationForms> {
    let p = RotatingFieldParams::new(delta, omega)?;
    if !(gamma >= 0.0) {
        return Err(Error::Domain(format!("gamma must be >= 0, got {gamma}")));
    }
    Ok(LindbladRotationForms {
        quasistationary: -0.5 * omega * delta / (delta * delta + gamma * gamma),
        decay_rate: 2.0 * omega * omega * gamma / (omega * omega + delta * delta),
        envelope_start: -omega / p.w_gap(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bath::Cutoff;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn ground_state_examples() {
        assert_eq!(ground_state_my(0.0, 1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(ground_state_my(0.1, 1.0).unwrap(), -0.09950, epsilon = 1e-5);
        assert_abs_diff_eq!(ground_state_my(1.0, 1.0).unwrap(), -0.5f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn berry_examples() {
        assert_eq!(berry_curvature(1.0).unwrap(), 0.5);
        for d in [0.3, 1.0, 7.0] {
            assert_abs_diff_eq!(berry_phase_half_sphere(d).unwrap(), PI, epsilon = 1e-14);
        }
        // Linear response: -m_y/Ω → 2ΔF = 1/Δ as Ω → 0.
        let p = RotatingFieldParams::new(2.0, 1e-6).unwrap();
        let response = -steady_state_my(&p, 0.0) / p.omega;
        assert_abs_diff_eq!(response, 1.0 / 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(response, 2.0 * 2.0 * berry_curvature(2.0).unwrap(), epsilon = 1e-9);
    }

    #[test]
    fn closed_form_limits() {
        let p = RotatingFieldParams::new(1.0, 0.1).unwrap();
        let bath = BathSpec::new(0.05, Cutoff::Finite(10.0), 1.0).unwrap();
        assert_abs_diff_eq!(closed_form_my(0.0, &p, &bath).unwrap(), 0.0, epsilon = 1e-16);
        let late = closed_form_my(5000.0, &p, &bath).unwrap();
        assert_abs_diff_eq!(late, steady_state_my(&p, 1.0), epsilon = 1e-12);
        assert_abs_diff_eq!(late, -0.0462, epsilon = 1e-4);
        assert!(closed_form_my(1.0, &p, &bath.with_j0(0.1).unwrap()).is_err());
    }

    #[test]
    fn lindblad_rotation_examples() {
        let f = lindblad_rotation_forms(1.0, 0.1, 0.0).unwrap();
        assert_abs_diff_eq!(f.quasistationary, -0.05, epsilon = 1e-15);
        let f = lindblad_rotation_forms(1.0, 0.1, 0.1).unwrap();
        assert_abs_diff_eq!(f.decay_rate, 0.00198, epsilon = 1e-5);
        assert_abs_diff_eq!(f.envelope(0.0), -0.1 / 1.01f64.sqrt(), epsilon = 1e-15);
    }
}
