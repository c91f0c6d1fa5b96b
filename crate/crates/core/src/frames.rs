//! Time-dependent basis transformations `U₁` (adiabatic) and `U₂` (improved eigenstates).
//!
//! Conventions: `H_lab = -b(t)·σ/2`, `ρ̇ = -i[H, ρ]`, and a frame `U` maps
//! `ρ -> U ρ U†` with `H -> U H U† + i U̇ U†`. With the scenario sign `s`
//! (`-1` for rotation, `+1` for Landau–Zener):
//!
//! * `b = E (s sinθ, 0, cosθ)`
//! * `U₁ = exp(i s θ σy/2)`, giving `H₁ = -(E σz + s θ̇ σy)/2`
//! * `U₂ = exp(-i s η σx/2)` with `tan η = θ̇/E`, giving `H₂ = -(W σz + s η̇ σx)/2`
//!
//! where `η̇` is stored as `-dη/dt`. For Landau–Zener the field is
//! `b = (Δ, 0, -vt)`: it points along `+ẑ` before the crossing and along `-ẑ`
//! after it.

use serde::{Deserialize, Serialize};

use crate::coupling::{CouplingMode, CouplingSpec};
use crate::error::{Error, Result};
use crate::state::{pauli_components, sigma_x, sigma_y, sigma_z, Mat2, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    Rotating,
    LandauZener,
}

/// Representation in which a state is expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// Fixed lab basis.
    Diabatic,
    /// After `U₁`.
    Adiabatic,
    /// After `U₂ U₁`.
    Eigen,
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diabatic" | "lab" => Ok(Basis::Diabatic),
            "adiabatic" => Ok(Basis::Adiabatic),
            "eigen" => Ok(Basis::Eigen),
            other => Err(Error::Config(format!(
                "unknown basis '{other}' (expected diabatic, adiabatic or eigen)"
            ))),
        }
    }
}

/// Field of constant magnitude `Δ` rotating in the x–z plane at rate `Ω`, from `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotatingFieldParams {
    pub delta: f64,
    pub omega: f64,
}

impl RotatingFieldParams {
    pub fn new(delta: f64, omega: f64) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(Error::Validation(format!("delta must be > 0, got {delta}")));
        }
        if !(omega >= 0.0 && omega.is_finite()) {
            return Err(Error::Validation(format!("omega must be >= 0, got {omega}")));
        }
        Ok(RotatingFieldParams { delta, omega })
    }

    pub fn w_gap(&self) -> f64 {
        self.delta.hypot(self.omega)
    }
}

/// Linear sweep through an avoided crossing of minimal gap `Δ` at speed `v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LzParams {
    pub delta: f64,
    pub v: f64,
}

impl LzParams {
    pub fn new(delta: f64, v: f64) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(Error::Validation(format!("delta must be > 0, got {delta}")));
        }
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Validation(format!("v must be > 0, got {v}")));
        }
        Ok(LzParams { delta, v })
    }

    /// Set when the two-transformation truncation is no longer accurate (`v > Δ²`).
    pub fn warning(&self) -> Option<String> {
        (self.v > self.delta * self.delta).then(|| {
            format!(
                "v = {} exceeds Δ² = {}: frame truncation error O(v²/Δ⁴) is not small",
                self.v,
                self.delta * self.delta
            )
        })
    }

    pub fn energy(&self, t: f64) -> f64 {
        (self.v * t).hypot(self.delta)
    }
}

/// Frame data at one instant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrameAngles {
    pub scenario: Scenario,
    pub theta: f64,
    pub eta: f64,
    pub theta_dot: f64,
    /// `-dη/dt`, the coefficient of the gauge term in the eigen frame.
    pub eta_dot: f64,
    pub e_gap: f64,
    pub w_gap: f64,
}

pub fn rotating_frame(t: f64, p: &RotatingFieldParams) -> FrameAngles {
    if t < 0.0 {
        return FrameAngles {
            scenario: Scenario::Rotating,
            theta: 0.0,
            eta: 0.0,
            theta_dot: 0.0,
            eta_dot: 0.0,
            e_gap: p.delta,
            w_gap: p.delta,
        };
    }
    FrameAngles {
        scenario: Scenario::Rotating,
        theta: p.omega * t,
        eta: (p.omega / p.delta).atan(),
        theta_dot: p.omega,
        eta_dot: 0.0,
        e_gap: p.delta,
        w_gap: p.w_gap(),
    }
}

pub fn lz_frame(t: f64, p: &LzParams) -> FrameAngles {
    let (d, v) = (p.delta, p.v);
    let e = p.energy(t);
    let e2 = e * e;
    let e3 = e2 * e;
    let coupling = v * d / e2;
    let w2 = e2 + coupling * coupling;
    FrameAngles {
        scenario: Scenario::LandauZener,
        theta: d.atan2(-v * t),
        eta: (v * d / e3).atan(),
        theta_dot: coupling,
        eta_dot: 3.0 * v * v * v * d * t / (e3 * w2),
        e_gap: e,
        w_gap: w2.sqrt(),
    }
}

impl FrameAngles {
    /// `-1` for rotation, `+1` for Landau–Zener.
    pub fn sense(&self) -> f64 {
        match self.scenario {
            Scenario::Rotating => -1.0,
            Scenario::LandauZener => 1.0,
        }
    }

    /// Drops the second transformation: `η = 0`, `W = E`.
    pub fn u1_only(&self) -> FrameAngles {
        FrameAngles { eta: 0.0, eta_dot: 0.0, w_gap: self.e_gap, ..*self }
    }

    /// Lab control field `b`.
    pub fn lab_field(&self) -> [f64; 3] {
        let s = self.sense();
        [self.e_gap * s * self.theta.sin(), 0.0, self.e_gap * self.theta.cos()]
    }

    /// Coefficient `g` in `H₁ = -(E σz + g σy)/2`.
    pub fn adiabatic_gauge(&self) -> f64 {
        self.sense() * self.theta_dot
    }

    /// Coefficient `h` in `H₂ = -(W σz + h σx)/2`.
    pub fn eigen_gauge(&self) -> f64 {
        self.sense() * self.eta_dot
    }

    pub fn u1(&self) -> Mat2 {
        let (sn, c) = (0.5 * self.theta).sin_cos();
        let s = self.sense() * sn;
        Mat2::new(C64::new(c, 0.0), C64::new(s, 0.0), C64::new(-s, 0.0), C64::new(c, 0.0))
    }

    pub fn u2(&self) -> Mat2 {
        let (sn, c) = (0.5 * self.eta).sin_cos();
        let s = self.sense() * sn;
        Mat2::new(C64::new(c, 0.0), C64::new(0.0, -s), C64::new(0.0, -s), C64::new(c, 0.0))
    }

    /// Map from lab to `basis`: `I`, `U₁` or `U₂U₁`.
    pub fn transform(&self, basis: Basis) -> Mat2 {
        match basis {
            Basis::Diabatic => Mat2::identity(),
            Basis::Adiabatic => self.u1(),
            Basis::Eigen => self.u2() * self.u1(),
        }
    }
}

/// Hamiltonian governing `ρ` in `basis`.
pub fn effective_hamiltonian(frame: &FrameAngles, basis: Basis) -> Mat2 {
    let h = |x: f64, y: f64, z: f64| {
        (sigma_x() * C64::new(x, 0.0) + sigma_y() * C64::new(y, 0.0) + sigma_z() * C64::new(z, 0.0))
            * C64::new(-0.5, 0.0)
    };
    match basis {
        Basis::Diabatic => {
            let b = frame.lab_field();
            h(b[0], b[1], b[2])
        }
        Basis::Adiabatic => h(0.0, frame.adiabatic_gauge(), frame.e_gap),
        Basis::Eigen => h(frame.eigen_gauge(), 0.0, frame.w_gap),
    }
}

/// Lab direction of the coupling at this instant.
pub(crate) fn lab_direction(coupling: &CouplingSpec, frame: &FrameAngles) -> Result<[f64; 3]> {
    match (frame.scenario, coupling.mode) {
        (Scenario::LandauZener, CouplingMode::PerpY) => Err(Error::Config(
            "perp-y coupling is not defined for the Landau-Zener scenario \
             (use inplane-z for transverse or longitudinal)"
                .into(),
        )),
        (_, CouplingMode::Longitudinal) => {
            let b = frame.lab_field();
            Ok(b.map(|x| x / frame.e_gap))
        }
        _ => Ok(coupling.n),
    }
}

/// Components of `V (n·σ) V†` on `(σx, σy, σz)` in the eigen frame `V = U₂U₁`.
pub fn transformed_coupling(coupling: &CouplingSpec, frame: &FrameAngles) -> Result<[f64; 3]> {
    let n = lab_direction(coupling, frame)?;
    let op = sigma_x() * C64::new(n[0], 0.0)
        + sigma_y() * C64::new(n[1], 0.0)
        + sigma_z() * C64::new(n[2], 0.0);
    let v = frame.transform(Basis::Eigen);
    Ok(pauli_components(&(v * op * v.adjoint())))
}

/// Source of frames for one scenario.
pub trait FrameProvider {
    fn scenario(&self) -> Scenario;
    fn frame_at(&self, t: f64) -> FrameAngles;
}

impl FrameProvider for RotatingFieldParams {
    fn scenario(&self) -> Scenario {
        Scenario::Rotating
    }
    fn frame_at(&self, t: f64) -> FrameAngles {
        rotating_frame(t, self)
    }
}

impl FrameProvider for LzParams {
    fn scenario(&self) -> Scenario {
        Scenario::LandauZener
    }
    fn frame_at(&self, t: f64) -> FrameAngles {
        lz_frame(t, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::hermiticity_error;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn lz(v: f64) -> LzParams {
        LzParams::new(1.0, v).unwrap()
    }

    fn rot(omega: f64) -> RotatingFieldParams {
        RotatingFieldParams::new(1.0, omega).unwrap()
    }

    fn max_abs(a: &Mat2) -> f64 {
        a.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `U H U† + i U̇ U†` with the derivative from central differences.
    fn transformed_numerically(
        provider: &dyn FrameProvider,
        t: f64,
        from: Basis,
        to: Basis,
    ) -> Mat2 {
        let u = |t: f64| {
            let f = provider.frame_at(t);
            f.transform(to) * f.transform(from).adjoint()
        };
        let h = 1e-5;
        let du = (u(t + h) - u(t - h)) / C64::new(2.0 * h, 0.0);
        let ut = u(t);
        let hf = effective_hamiltonian(&provider.frame_at(t), from);
        ut * hf * ut.adjoint() + du * ut.adjoint() * C64::new(0.0, 1.0)
    }

    #[test]
    fn rotating_examples() {
        let f = rotating_frame(3.0, &rot(0.0));
        assert_eq!((f.eta, f.w_gap), (0.0, 1.0));
        let f = rotating_frame(3.0, &rot(0.1));
        assert_abs_diff_eq!(f.eta, 0.09967, epsilon = 1e-5);
        assert_abs_diff_eq!(f.w_gap, 1.00499, epsilon = 1e-5);
        assert_abs_diff_eq!(rotating_frame(PI / 0.1, &rot(0.1)).theta, PI, epsilon = 1e-12);
        assert_eq!(rotating_frame(-1.0, &rot(0.1)).theta, 0.0);
    }

    #[test]
    fn lz_examples() {
        let f = lz_frame(0.0, &lz(0.5));
        assert_abs_diff_eq!(f.theta, FRAC_PI_2, epsilon = 1e-15);
        assert_abs_diff_eq!(f.eta, 0.46365, epsilon = 1e-5);
        assert_abs_diff_eq!(f.w_gap, 1.11803, epsilon = 1e-5);
        assert_eq!(f.eta_dot, 0.0);

        let early = lz_frame(-1e6, &lz(0.5));
        assert!(early.theta < 1e-5 && early.eta < 1e-15);
        assert_abs_diff_eq!(early.w_gap / 0.5e6, 1.0, epsilon = 1e-9);

        let slow = lz_frame(3.0, &lz(1e-8));
        assert!(slow.eta < 1e-7);
        assert_abs_diff_eq!(slow.w_gap, slow.e_gap, epsilon = 1e-12);
    }

    #[test]
    fn lz_warns_for_fast_sweeps() {
        assert!(lz(0.5).warning().is_none());
        assert!(lz(2.0).warning().is_some());
    }

    #[test]
    fn adiabatic_hamiltonian_coefficients() {
        let h = effective_hamiltonian(&rotating_frame(2.0, &rot(0.0)), Basis::Adiabatic);
        assert!(max_abs(&(h + sigma_z() * C64::new(0.5, 0.0))) < 1e-15);

        let h = effective_hamiltonian(&lz_frame(0.0, &lz(0.5)), Basis::Adiabatic);
        assert_abs_diff_eq!(pauli_components(&h)[1], -0.25, epsilon = 1e-15);
    }

    #[test]
    fn eigen_level_has_gap_w() {
        for f in [rotating_frame(4.0, &rot(0.3)), lz_frame(-2.0, &lz(0.7))] {
            let h = effective_hamiltonian(&f, Basis::Eigen);
            let c = pauli_components(&h);
            let half_gap = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
            if f.scenario == Scenario::Rotating {
                assert_abs_diff_eq!(half_gap, f.w_gap / 2.0, epsilon = 1e-15);
            } else {
                assert_abs_diff_eq!(half_gap, f.w_gap.hypot(f.eta_dot) / 2.0, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn frame_hamiltonians_follow_from_lab() {
        let providers: [&dyn FrameProvider; 2] = [&rot(0.3), &lz(0.5)];
        for p in providers {
            for t in [0.7, 2.3, -1.1] {
                if p.scenario() == Scenario::Rotating && t < 0.0 {
                    continue;
                }
                let f = p.frame_at(t);
                let h1 = transformed_numerically(p, t, Basis::Diabatic, Basis::Adiabatic);
                assert!(max_abs(&(h1 - effective_hamiltonian(&f, Basis::Adiabatic))) < 1e-8);
                let h2 = transformed_numerically(p, t, Basis::Adiabatic, Basis::Eigen);
                assert!(max_abs(&(h2 - effective_hamiltonian(&f, Basis::Eigen))) < 1e-8);
            }
        }
    }

    #[test]
    fn lab_field_matches_lz_sweep() {
        let b = lz_frame(2.0, &lz(0.5)).lab_field();
        assert_abs_diff_eq!(b[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(b[2], -1.0, epsilon = 1e-14);
    }

    #[test]
    fn transformed_coupling_examples() {
        let perp = CouplingSpec::new(CouplingMode::PerpY);
        let c = transformed_coupling(&perp, &rotating_frame(1.0, &rot(0.0))).unwrap();
        assert_abs_diff_eq!(c[1], 1.0, epsilon = 1e-15);

        let f = rotating_frame(5.0, &rot(0.1));
        let c = transformed_coupling(&perp, &f).unwrap();
        assert_abs_diff_eq!(c[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c[1], f.eta.cos(), epsilon = 1e-15);
        assert_abs_diff_eq!(c[2], -f.eta.sin(), epsilon = 1e-15);

        let inplane = CouplingSpec::new(CouplingMode::InPlaneZ);
        let c = transformed_coupling(&inplane, &rotating_frame(0.0, &rot(0.1))).unwrap();
        assert_abs_diff_eq!(c[1], 0.1 / 1.01f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(c[2].abs(), 1.0 / 1.01f64.sqrt(), epsilon = 1e-15);

        let c = transformed_coupling(&inplane, &lz_frame(0.0, &lz(0.5))).unwrap();
        assert_abs_diff_eq!(c[0] * c[0] + c[1] * c[1], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn perp_y_rejected_for_lz() {
        let r = transformed_coupling(&CouplingSpec::new(CouplingMode::PerpY), &lz_frame(0.0, &lz(0.5)));
        assert!(matches!(r, Err(Error::Config(_))));
    }

    #[test]
    fn transforms_are_unitary() {
        let f = lz_frame(0.4, &lz(0.9));
        for b in [Basis::Diabatic, Basis::Adiabatic, Basis::Eigen] {
            let u = f.transform(b);
            assert!(max_abs(&(u * u.adjoint() - Mat2::identity())) < 1e-15);
            assert!(hermiticity_error(&effective_hamiltonian(&f, b)) == 0.0);
        }
    }

    proptest! {
        #[test]
        fn coupling_stays_normalized(t in -50.0f64..50.0, v in 0.05f64..2.0, omega in 0.0f64..2.0) {
            for mode in [CouplingMode::InPlaneZ, CouplingMode::Longitudinal] {
                let c = transformed_coupling(&CouplingSpec::new(mode), &lz_frame(t, &lz(v))).unwrap();
                prop_assert!((c[0]*c[0] + c[1]*c[1] + c[2]*c[2] - 1.0).abs() < 1e-12);
            }
            for mode in CouplingMode::ALL {
                let c = transformed_coupling(&CouplingSpec::new(mode), &rotating_frame(t.abs(), &rot(omega))).unwrap();
                prop_assert!((c[0]*c[0] + c[1]*c[1] + c[2]*c[2] - 1.0).abs() < 1e-12);
            }
        }

        #[test]
        fn lz_frame_symmetry(t in 0.0f64..100.0, v in 0.01f64..3.0) {
            let (a, b) = (lz_frame(t, &lz(v)), lz_frame(-t, &lz(v)));
            prop_assert!((b.theta - (PI - a.theta)).abs() < 1e-12);
            prop_assert_eq!(a.eta, b.eta);
            prop_assert_eq!(a.eta_dot, -b.eta_dot);
        }

        #[test]
        fn lz_eta_bounded(t in -100.0f64..100.0, v in 0.01f64..3.0) {
            let f = lz_frame(t, &lz(v));
            prop_assert!(f.eta <= lz_frame(0.0, &lz(v)).eta);
            prop_assert!(f.eta <= v + 1e-15);
            prop_assert!(f.w_gap >= f.e_gap && f.e_gap >= 1.0);
        }

        #[test]
        fn eta_dot_is_minus_eta_derivative(t in -20.0f64..20.0, v in 0.05f64..2.0) {
            let h = 1e-5;
            let deriv = (lz_frame(t + h, &lz(v)).eta - lz_frame(t - h, &lz(v)).eta) / (2.0 * h);
            prop_assert!((lz_frame(t, &lz(v)).eta_dot + deriv).abs() < 1e-8);
        }
    }
}
