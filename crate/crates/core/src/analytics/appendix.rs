use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::bessel::modified_bessel_k0;
use crate::bath::planck_occupation;
use crate::error::{Error, Result};
use crate::frames::LzParams;
use crate::quad::{integrate_to_infinity, Tolerance};

/// A closed form and the adaptive quadrature of the integral it approximates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralPair {
    pub closed: f64,
    pub quadrature: f64,
}

impl IntegralPair {
    /// `|closed/quadrature - 1|`, or the absolute gap when the quadrature is zero.
    pub fn relative_error(&self) -> f64 {
        if self.quadrature == 0.0 {
            self.closed.abs()
        } else if self.closed == self.quadrature {
            0.0
        } else {
            (self.closed / self.quadrature - 1.0).abs()
        }
    }
}

/// Integrals entering the activation estimates for a sweep through the crossing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AppendixIntegrals {
    /// Exponent `∫_0^∞ Γ₀ coth(W/2T) dt`; closed form with `K₀(Δ/T)` and `K₀(Δ/E_c)`.
    pub i1_zero: IntegralPair,
    /// `∫ Γ_e dt` with `N ≈ e^{-s/T}`, closed form `(2παΔ²/v) K₀(Δ/T)`.
    pub i2_low_t: IntegralPair,
    /// `∫ Γ_e dt` with `N ≈ T/s`, closed form `π²αTΔ/v`.
    pub i2_high_t: IntegralPair,
    /// Short-time contribution `π²αΔT/v` missed by starting the exponent at `t = 0`.
    pub delta_i1: IntegralPair,
    /// High-temperature longitudinal exponent, closed form `(3π²/4)αTv/Δ³`.
    pub i3: IntegralPair,
    /// Longitudinal relaxation exponent `2παv/3Δ²`.
    pub i1_longitudinal: IntegralPair,
    /// Longitudinal activation. The closed form is the standard `αv√(π³/32TΔ³) e^{-Δ/T}`,
    /// which exceeds the integral by `Δ/8T` at low temperature.
    pub i2_longitudinal: IntegralPair,
    pub warnings: Vec<String>,
}

const TOL: Tolerance = Tolerance { abs: 0.0, rel: 1e-10 };

/// `∫_Δ^∞ f(s)/√(s²-Δ²) ds` with `s = Δ + w²` removing the endpoint singularity.
fn hyperbolic_integral(delta: f64, f: impl Fn(f64) -> f64) -> Result<f64> {
    integrate_to_infinity(
        |w| {
            let s = delta + w * w;
            2.0 * f(s) / (s + delta).sqrt()
        },
        0.0,
        TOL,
    )
}

/// Evaluates every integral both in closed form and by quadrature.
///
/// `e_cutoff` may be `f64::INFINITY`; the transverse exponent `I₁(0)` is then infinite.
pub fn appendix_integrals(alpha: f64, v: f64, delta: f64, temperature: f64, e_cutoff: f64) -> Result<AppendixIntegrals> {
    let p = LzParams::new(delta, v)?;
    if !(alpha >= 0.0) {
        return Err(Error::Domain(format!("alpha must be >= 0, got {alpha}")));
    }
    if !(temperature >= 0.0 && temperature.is_finite()) {
        return Err(Error::Domain(format!("temperature must be finite and >= 0, got {temperature}")));
    }
    if !(e_cutoff > 0.0) {
        return Err(Error::Domain(format!("cutoff must be > 0, got {e_cutoff}")));
    }
    let d = p.delta;
    let t = temperature;
    let pref = PI * alpha * d * d / v;
    let damp = |s: f64| if e_cutoff.is_finite() { (-s / e_cutoff).exp() } else { 1.0 };
    let occupation = |s: f64| planck_occupation(s, t).unwrap_or(f64::NAN);
    let k0_over_t = if t == 0.0 { 0.0 } else { modified_bessel_k0(d / t)? };

    let i1_zero = if e_cutoff.is_finite() {
        IntegralPair {
            closed: pref * (2.0 * k0_over_t + modified_bessel_k0(d / e_cutoff)?),
            quadrature: pref * hyperbolic_integral(d, |s| (1.0 + 2.0 * occupation(s)) * damp(s))?,
        }
    } else {
        IntegralPair { closed: f64::INFINITY, quadrature: f64::INFINITY }
    };
    let i2_low_t = IntegralPair {
        closed: 2.0 * pref * k0_over_t,
        quadrature: 2.0 * pref * hyperbolic_integral(d, |s| occupation(s) * damp(s))?,
    };
    let i2_high_t = IntegralPair {
        closed: PI * PI * alpha * t * d / v,
        quadrature: i2_low_t.quadrature,
    };
    let delta_i1 = IntegralPair {
        closed: PI * PI * alpha * d * t / v,
        quadrature: pref * hyperbolic_integral(d, |s| 2.0 * t / s)?,
    };
    let i3_rate = |time: f64| {
        let e2 = d * d + v * v * time * time;
        let w2 = e2 + v * v * d * d / (e2 * e2);
        v * v * d * d / (w2 * e2 * e2)
    };
    let i3 = IntegralPair {
        closed: 0.75 * PI * PI * alpha * t * v / d.powi(3),
        quadrature: 4.0 * PI * alpha * t * integrate_to_infinity(i3_rate, 0.0, TOL)?,
    };
    let long_pref = PI * alpha * d * d * v;
    let i1_longitudinal = IntegralPair {
        closed: 2.0 * PI * alpha * v / (3.0 * d * d),
        quadrature: long_pref * hyperbolic_integral(d, |s| s.powi(-4))?,
    };
    let i2_longitudinal = IntegralPair {
        closed: if t == 0.0 {
            0.0
        } else {
            alpha * v * (PI.powi(3) / (32.0 * t * d.powi(3))).sqrt() * (-d / t).exp()
        },
        quadrature: 2.0 * long_pref * hyperbolic_integral(d, |s| occupation(s) * s.powi(-4))?,
    };

    let mut warnings = Vec::new();
    if delta_i1.closed >= 1.0 {
        warnings.push(format!("δI₁ = {:.3} >= 1: the activation estimates do not apply", delta_i1.closed));
    }
    if t > 0.5 * d {
        warnings.push(format!("low-T forms used at T = {t} (need T << Δ)"));
    }
    if t < 2.0 * d {
        warnings.push(format!("high-T forms used at T = {t} (need T >> Δ)"));
    }
    if v > d * d {
        warnings.push(format!("I₃ closed form needs v << Δ², got v = {v}"));
    }
    Ok(AppendixIntegrals { i1_zero, i2_low_t, i2_high_t, delta_i1, i3, i1_longitudinal, i2_longitudinal, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn examples() {
        let a = appendix_integrals(0.05, 0.5, 1.0, 2.0, 10.0).unwrap();
        assert_abs_diff_eq!(a.i3.closed, 0.37011, epsilon = 1e-5);
        assert_abs_diff_eq!(a.i1_longitudinal.closed, 0.05236, epsilon = 1e-5);
        assert!(a.i1_longitudinal.relative_error() < 1e-8);
        assert!(a.delta_i1.relative_error() < 1e-8);
    }

    #[test]
    fn closed_forms_in_regime() {
        let low = appendix_integrals(0.05, 0.5, 1.0, 0.2, 1000.0).unwrap();
        assert!(low.i2_low_t.relative_error() < 0.05, "{:?}", low.i2_low_t);
        assert!(low.i1_zero.relative_error() < 0.05, "{:?}", low.i1_zero);
        let colder = appendix_integrals(0.05, 0.5, 1.0, 0.005, 1000.0).unwrap();
        // The standard longitudinal activation form is off by Δ/8T; the integral itself
        // follows αv√(2π³T/Δ⁵) e^{-Δ/T}.
        let i2 = colder.i2_longitudinal;
        let t = 0.005f64;
        let direct = 0.05 * 0.5 * (2.0 * PI.powi(3) * t).sqrt() * (-1.0 / t).exp();
        assert!((i2.quadrature / direct - 1.0).abs() < 0.05, "{i2:?}");
        assert!((i2.closed / i2.quadrature * 8.0 * t - 1.0).abs() < 0.05, "{i2:?}");
        let high = appendix_integrals(0.05, 0.5, 1.0, 100.0, f64::INFINITY).unwrap();
        assert!(high.i2_high_t.relative_error() < 0.05, "{:?}", high.i2_high_t);
        let slow = appendix_integrals(0.05, 0.05, 1.0, 2.0, 10.0).unwrap();
        assert!(slow.i3.relative_error() < 0.05, "{:?}", slow.i3);
    }

    #[test]
    fn zero_temperature() {
        let a = appendix_integrals(0.05, 0.5, 1.0, 0.0, 10.0).unwrap();
        assert_eq!(a.i2_low_t.quadrature, 0.0);
        assert_eq!(a.i3.closed, 0.0);
        assert!(a.i1_zero.relative_error() < 1e-8);
    }
}
