//! Instantaneous Bloch–Redfield rates.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::bath::{ohmic_spectral_density, planck_occupation, BathSpec};
use crate::coupling::{CouplingMode, CouplingSpec};
use crate::error::{Error, Result};
use crate::frames::{FrameAngles, Scenario};

/// Relaxation `Γ_r`, excitation `Γ_e`, dephasing `Γ_φ` and total transverse `Γ_2` rates.
///
/// `geometry_factor` is the qubit-flip weight of the coupling (`cos²η`,
/// `G(t)`, `G_LZ(t)` or `sin²η`).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct RateSet {
    pub gamma_r: f64,
    pub gamma_e: f64,
    pub gamma_2: f64,
    pub gamma_phi: f64,
    pub geometry_factor: f64,
}

impl RateSet {
    /// Rates for flip weight `flip` at level splitting `eps`.
    pub fn from_weights(flip: f64, gamma_phi: f64, eps: f64, bath: &BathSpec) -> Result<Self> {
        if bath.alpha == 0.0 || flip == 0.0 {
            return Ok(RateSet {
                gamma_phi,
                gamma_2: gamma_phi,
                geometry_factor: flip,
                ..RateSet::default()
            });
        }
        let j = ohmic_spectral_density(eps, bath)?;
        let n = planck_occupation(eps, bath.temperature)?;
        let gamma_r = 0.5 * flip * j * (n + 1.0);
        let gamma_e = 0.5 * flip * j * n;
        Ok(RateSet {
            gamma_r,
            gamma_e,
            gamma_2: 0.5 * (gamma_r + gamma_e) + gamma_phi,
            gamma_phi,
            geometry_factor: flip,
        })
    }

    pub fn total_flip(&self) -> f64 {
        self.gamma_r + self.gamma_e
    }
}

/// Rates for a static field of magnitude `eps` along `ẑ`.
pub fn static_rates(coupling: &CouplingSpec, eps: f64, bath: &BathSpec) -> Result<RateSet> {
    if !(eps > 0.0) {
        return Err(Error::Domain(format!("static rates need eps > 0, got {eps}")));
    }
    let n = coupling.n;
    RateSet::from_weights(n[0] * n[0] + n[1] * n[1], n[2] * n[2] * bath.j0, eps, bath)
}

fn require(frame: &FrameAngles, scenario: Scenario) -> Result<()> {
    if frame.scenario != scenario {
        return Err(Error::Config(format!(
            "frame belongs to {:?}, expected {:?}",
            frame.scenario, scenario
        )));
    }
    Ok(())
}

/// Rates for the rotating field, all evaluated at the eigen-frame gap `W`.
///
/// Dephasing weights: `sin²η/2` (perp-y), `cos²η cos²Ωt` (in-plane),
/// `cos²η` (longitudinal), each multiplying `J₀`.
pub fn rotating_rates(mode: CouplingMode, frame: &FrameAngles, bath: &BathSpec) -> Result<RateSet> {
    require(frame, Scenario::Rotating)?;
    let (s2, c2) = (frame.eta.sin().powi(2), frame.eta.cos().powi(2));
    let (flip, deph) = match mode {
        CouplingMode::PerpY => (c2, 0.5 * s2),
        CouplingMode::InPlaneZ => {
            let (st, ct) = frame.theta.sin_cos();
            (s2 + st * st * c2, c2 * ct * ct)
        }
        CouplingMode::Longitudinal => (s2, c2),
    };
    RateSet::from_weights(flip, deph * bath.j0, frame.w_gap, bath)
}

/// Landau–Zener coupling kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LzCoupling {
    /// `n = ẑ`.
    Transverse,
    /// `n ∥ b(t)`.
    Longitudinal,
}

impl TryFrom<CouplingMode> for LzCoupling {
    type Error = Error;

    fn try_from(mode: CouplingMode) -> Result<Self> {
        match mode {
            CouplingMode::InPlaneZ => Ok(LzCoupling::Transverse),
            CouplingMode::Longitudinal => Ok(LzCoupling::Longitudinal),
            CouplingMode::PerpY => Err(Error::Config(
                "perp-y coupling is not defined for the Landau-Zener scenario".into(),
            )),
        }
    }
}

/// `G_LZ = sin²η + sin²θ cos²η` (transverse) or `sin²η` (longitudinal).
pub fn lz_flip_factor(kind: LzCoupling, frame: &FrameAngles) -> f64 {
    let s2 = frame.eta.sin().powi(2);
    match kind {
        LzCoupling::Transverse => s2 + frame.theta.sin().powi(2) * (1.0 - s2),
        LzCoupling::Longitudinal => s2,
    }
}

pub fn lz_rates(kind: LzCoupling, frame: &FrameAngles, bath: &BathSpec) -> Result<RateSet> {
    require(frame, Scenario::LandauZener)?;
    let c2 = frame.eta.cos().powi(2);
    let deph = match kind {
        LzCoupling::Transverse => c2 * frame.theta.cos().powi(2),
        LzCoupling::Longitudinal => c2,
    };
    RateSet::from_weights(lz_flip_factor(kind, frame), deph * bath.j0, frame.w_gap, bath)
}

/// Whether the rate-equation coefficient carries `exp(-W/E_c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutoffTreatment {
    #[default]
    Apply,
    Omit,
}

/// `Γ₀ = π α W G`, times `exp(-W/E_c)` unless omitted.
///
/// Equals `Γ_r - Γ_e` of [`lz_rates`] when the cutoff is applied.
pub fn rate_equation_coefficient(
    kind: LzCoupling,
    frame: &FrameAngles,
    bath: &BathSpec,
    cutoff: CutoffTreatment,
) -> Result<f64> {
    require(frame, Scenario::LandauZener)?;
    let base = PI * bath.alpha * frame.w_gap * lz_flip_factor(kind, frame);
    Ok(match cutoff {
        CutoffTreatment::Apply => base * bath.cutoff.factor(frame.w_gap),
        CutoffTreatment::Omit => base,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bath::Cutoff;
    use crate::frames::{lz_frame, rotating_frame, transformed_coupling, LzParams, RotatingFieldParams};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn bath(alpha: f64, ec: f64, t: f64) -> BathSpec {
        BathSpec::new(alpha, Cutoff::Finite(ec), t).unwrap()
    }

    fn lz(v: f64) -> LzParams {
        LzParams::new(1.0, v).unwrap()
    }

    fn rot(omega: f64) -> RotatingFieldParams {
        RotatingFieldParams::new(1.0, omega).unwrap()
    }

    #[test]
    fn static_examples() {
        let b = bath(0.05, 10.0, 0.0).with_j0(0.0).unwrap();
        let z = static_rates(&CouplingSpec::new(CouplingMode::InPlaneZ), 1.0, &b).unwrap();
        assert_eq!((z.gamma_r, z.gamma_e, z.gamma_2, z.gamma_phi), (0.0, 0.0, 0.0, 0.0));

        let y = CouplingSpec::new(CouplingMode::PerpY);
        let r = static_rates(&y, 1.0, &b).unwrap();
        assert_eq!(r.gamma_e, 0.0);
        assert_abs_diff_eq!(r.gamma_r, 0.14214, epsilon = 1e-5);

        let r = static_rates(&y, 1.0, &bath(0.05, 10.0, 1.0)).unwrap();
        assert_abs_diff_eq!(r.gamma_e, 0.08272, epsilon = 1e-5);
        assert!(static_rates(&y, 0.0, &b).is_err());
    }

    #[test]
    fn rotating_examples() {
        let f = rotating_frame(1.0, &rot(0.1));
        let r = rotating_rates(CouplingMode::PerpY, &f, &bath(0.05, 10.0, 0.0)).unwrap();
        // cos²η/2 · 2πα W e^{-W/E_c} with W = √1.01.
        let w = 1.01f64.sqrt();
        assert_abs_diff_eq!(r.gamma_r, 0.5 / 1.01 * 2.0 * std::f64::consts::PI * 0.05 * w * (-w / 10.0).exp(), epsilon = 1e-15);
        assert_abs_diff_eq!(r.gamma_r, 0.141356, epsilon = 1e-6);
        assert_eq!(r.gamma_e, 0.0);

        let half_turn = rotating_frame(std::f64::consts::PI / 0.1, &rot(0.1));
        let r = rotating_rates(CouplingMode::InPlaneZ, &half_turn, &bath(0.05, 10.0, 0.0)).unwrap();
        assert_abs_diff_eq!(r.geometry_factor, half_turn.eta.sin().powi(2), epsilon = 1e-14);

        let r = rotating_rates(CouplingMode::Longitudinal, &rotating_frame(1.0, &rot(0.0)), &bath(0.1, 10.0, 1.0))
            .unwrap();
        assert_eq!(r.total_flip(), 0.0);
    }

    #[test]
    fn lz_examples() {
        let f = lz_frame(0.0, &lz(0.5));
        let r = lz_rates(LzCoupling::Transverse, &f, &bath(0.05, 10.0, 0.0)).unwrap();
        assert_abs_diff_eq!(r.gamma_r, 0.157043, epsilon = 1e-6);

        let b = bath(0.05, 1e9, 0.0);
        let late = |t: f64| lz_rates(LzCoupling::Longitudinal, &lz_frame(t, &lz(0.5)), &b).unwrap().gamma_r;
        // Γ_r ~ t^-5 at large t (sin²η ~ t^-6 times W ~ t).
        assert_abs_diff_eq!(late(200.0) / late(400.0), 32.0, epsilon = 0.05);

        let zero = lz_rates(LzCoupling::Transverse, &f, &bath(0.0, 10.0, 1.0)).unwrap();
        assert_eq!(zero, RateSet { geometry_factor: zero.geometry_factor, ..RateSet::default() });
    }

    #[test]
    fn rate_equation_coefficient_examples() {
        let f = lz_frame(0.0, &lz(0.5));
        let open = BathSpec::new(0.05, Cutoff::Infinite, 0.0).unwrap();
        let g = rate_equation_coefficient(LzCoupling::Transverse, &f, &open, CutoffTreatment::Apply).unwrap();
        assert_abs_diff_eq!(g, 0.17562, epsilon = 1e-5);
        let g = rate_equation_coefficient(LzCoupling::Longitudinal, &f, &open, CutoffTreatment::Apply).unwrap();
        assert_abs_diff_eq!(g, 0.03512, epsilon = 1e-5);
        let none = BathSpec::decoupled();
        assert_eq!(rate_equation_coefficient(LzCoupling::Transverse, &f, &none, CutoffTreatment::Omit).unwrap(), 0.0);
    }

    #[test]
    fn wrong_scenario_rejected() {
        let f = rotating_frame(1.0, &rot(0.1));
        assert!(lz_rates(LzCoupling::Transverse, &f, &bath(0.05, 10.0, 0.0)).is_err());
        assert!(rotating_rates(CouplingMode::PerpY, &lz_frame(0.0, &lz(0.5)), &bath(0.05, 10.0, 0.0)).is_err());
    }

    proptest! {
        #[test]
        fn detailed_balance(t in -30.0f64..30.0, v in 0.05f64..1.5, temp in 0.05f64..5.0) {
            let f = lz_frame(t, &lz(v));
            let r = lz_rates(LzCoupling::Transverse, &f, &bath(0.05, 10.0, temp)).unwrap();
            let expected = (-f.w_gap / temp).exp();
            prop_assert!((r.gamma_e / r.gamma_r / expected - 1.0).abs() < 1e-12);
        }

        #[test]
        fn static_rates_invariant_under_z_rotation(phi in 0.0f64..6.3, polar in 0.0f64..3.14, eps in 0.1f64..5.0) {
            let b = bath(0.05, 10.0, 0.7).with_j0(0.01).unwrap();
            let n = [polar.sin() * phi.cos(), polar.sin() * phi.sin(), polar.cos()];
            let m = [polar.sin(), 0.0, polar.cos()];
            let a = static_rates(&CouplingSpec::with_direction(CouplingMode::PerpY, n).unwrap(), eps, &b).unwrap();
            let c = static_rates(&CouplingSpec::with_direction(CouplingMode::PerpY, m).unwrap(), eps, &b).unwrap();
            prop_assert!((a.gamma_r - c.gamma_r).abs() <= 1e-14 * c.gamma_r.max(1e-300));
            prop_assert!((a.gamma_phi - c.gamma_phi).abs() <= 1e-15);
        }

        #[test]
        fn rate_set_invariants(t in 0.0f64..100.0, omega in 0.0f64..1.0, temp in 0.0f64..3.0, j0 in 0.0f64..0.1) {
            let b = bath(0.1, 10.0, temp).with_j0(j0).unwrap();
            for mode in CouplingMode::ALL {
                let r = rotating_rates(mode, &rotating_frame(t, &rot(omega)), &b).unwrap();
                prop_assert!(r.gamma_r >= 0.0 && r.gamma_e >= 0.0 && r.gamma_phi >= 0.0);
                prop_assert!(r.gamma_2 >= 0.5 * r.total_flip() - 1e-12);
                if temp == 0.0 { prop_assert_eq!(r.gamma_e, 0.0); }
            }
        }

        #[test]
        fn flip_factors_match_transformed_coupling(t in 0.0f64..100.0, omega in 0.0f64..1.0, s in -40.0f64..40.0, v in 0.05f64..2.0) {
            let b = bath(0.1, 10.0, 0.0);
            let f = rotating_frame(t, &rot(omega));
            for mode in CouplingMode::ALL {
                let c = transformed_coupling(&CouplingSpec::new(mode), &f).unwrap();
                let r = rotating_rates(mode, &f, &b).unwrap();
                prop_assert!((r.geometry_factor - (c[0]*c[0] + c[1]*c[1])).abs() < 1e-12);
            }
            let f = lz_frame(s, &lz(v));
            for mode in [CouplingMode::InPlaneZ, CouplingMode::Longitudinal] {
                let c = transformed_coupling(&CouplingSpec::new(mode), &f).unwrap();
                let g = lz_flip_factor(LzCoupling::try_from(mode).unwrap(), &f);
                prop_assert!((g - (c[0]*c[0] + c[1]*c[1])).abs() < 1e-12);
            }
        }

        #[test]
        fn lz_factors_even_and_bounded(t in 0.0f64..60.0, v in 0.05f64..2.0) {
            let (a, b) = (lz_frame(t, &lz(v)), lz_frame(-t, &lz(v)));
            for kind in [LzCoupling::Transverse, LzCoupling::Longitudinal] {
                let g = lz_flip_factor(kind, &a);
                prop_assert!((g - lz_flip_factor(kind, &b)).abs() < 1e-14);
                prop_assert!(g > 0.0 && g <= 1.0 + 1e-15);
            }
            let l0 = lz_flip_factor(LzCoupling::Longitudinal, &lz_frame(0.0, &lz(v)));
            prop_assert!(lz_flip_factor(LzCoupling::Longitudinal, &a) <= l0);
        }

        #[test]
        fn g_lz_closed_form(t in -40.0f64..40.0, v in 0.05f64..2.0) {
            let f = lz_frame(t, &lz(v));
            let e2 = f.e_gap * f.e_gap;
            let closed = (v * v + e2 * e2) / (v * v + e2 * e2 * e2);
            prop_assert!((lz_flip_factor(LzCoupling::Transverse, &f) - closed).abs() < 1e-13);
        }

        #[test]
        fn gamma_zero_matches_rate_difference(t in -40.0f64..40.0, v in 0.05f64..2.0, temp in 0.05f64..4.0) {
            let f = lz_frame(t, &lz(v));
            let finite = bath(0.05, 10.0, temp);
            let r = lz_rates(LzCoupling::Transverse, &f, &finite).unwrap();
            let g0 = rate_equation_coefficient(LzCoupling::Transverse, &f, &finite, CutoffTreatment::Apply).unwrap();
            prop_assert!((g0 - (r.gamma_r - r.gamma_e)).abs() < 1e-13);
            let bare = rate_equation_coefficient(LzCoupling::Transverse, &f, &finite, CutoffTreatment::Omit).unwrap();
            prop_assert!((g0 / bare - (-f.w_gap / 10.0).exp()).abs() < 1e-14);
        }
    }
}
