use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use super::bessel::EULER_GAMMA;
use super::Estimate;
use crate::bath::{BathSpec, Cutoff};
use crate::error::{Error, Result};
use crate::frames::{lz_frame, LzParams};
use crate::quad::{integrate, integrate_to_infinity, Tolerance};
use crate::rates::{lz_rates, LzCoupling};

/// Coherent Landau–Zener excitation probability `exp(-πΔ²/2v)`.
pub fn lz_ideal_probability(v: f64, delta: f64) -> Result<f64> {
    let p = LzParams::new(delta, v)?;
    Ok((-PI * p.delta * p.delta / (2.0 * p.v)).exp())
}

/// Zero-temperature relaxation after the crossing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Suppression {
    /// Power-law exponent `παΔ²/v` of `P_e(t) ∝ t^{-exponent}`.
    pub exponent: f64,
    /// `exp(-exponent · ln(2E_c/(e^γ Δ)))`.
    pub pi_factor: f64,
}

pub fn lz_zero_t_suppression(alpha: f64, v: f64, delta: f64, e_cutoff: f64) -> Result<Suppression> {
    let p = LzParams::new(delta, v)?;
    if !(alpha >= 0.0) {
        return Err(Error::Domain(format!("alpha must be >= 0, got {alpha}")));
    }
    if !(e_cutoff > 0.0) {
        return Err(Error::Domain(format!("cutoff must be > 0, got {e_cutoff}")));
    }
    let exponent = PI * alpha * p.delta * p.delta / p.v;
    let log = (2.0 * e_cutoff / (EULER_GAMMA.exp() * p.delta)).ln();
    Ok(Suppression { exponent, pi_factor: (-exponent * log).exp() })
}

/// Long-time `P_e(t) = C (vt/Δ)^{-παΔ²/v}` at zero temperature without a cutoff.
pub fn lz_power_law(t: f64, alpha: f64, v: f64, delta: f64, c: f64) -> Result<f64> {
    let p = LzParams::new(delta, v)?;
    if !(t > 0.0) {
        return Err(Error::Domain(format!("power law needs t > 0, got {t}")));
    }
    let exponent = PI * alpha * p.delta * p.delta / p.v;
    Ok(c * (p.v * t / p.delta).powf(-exponent))
}

/// `P_∞(T=0) = C Π`. `c` defaults to the coherent probability.
pub fn lz_zero_t_p_inf(alpha: f64, v: f64, delta: f64, e_cutoff: f64, c: Option<f64>) -> Result<f64> {
    let c = match c {
        Some(c) => c,
        None => lz_ideal_probability(v, delta)?,
    };
    Ok(c * lz_zero_t_suppression(alpha, v, delta, e_cutoff)?.pi_factor)
}

/// `Δ_r = Δ (Δ/E_c)^{α/(1-α)}`.
pub fn renormalized_gap(alpha: f64, delta: f64, e_cutoff: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Domain(format!("renormalized gap needs 0 <= alpha < 1, got {alpha}")));
    }
    if !(delta > 0.0 && e_cutoff > 0.0) {
        return Err(Error::Domain("delta and cutoff must be > 0".into()));
    }
    Ok(delta * (delta / e_cutoff).powf(alpha / (1.0 - alpha)))
}

/// `ρ₁₁(t) = C' exp(-πΔ_r²/(4αΓ(2α)v) · (vt/Δ_r)^{2α})`.
pub fn strong_coupling_decay(t: f64, alpha: f64, v: f64, delta: f64, e_cutoff: f64, c_prime: f64) -> Result<f64> {
    let p = LzParams::new(delta, v)?;
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("strong-coupling decay needs alpha > 0, got {alpha}")));
    }
    if !(t > 0.0) {
        return Err(Error::Domain(format!("strong-coupling decay needs t > 0, got {t}")));
    }
    let dr = renormalized_gap(alpha, p.delta, e_cutoff)?;
    let rate = PI * dr * dr / (4.0 * alpha * gamma(2.0 * alpha) * p.v);
    Ok(c_prime * (-rate * (p.v * t / dr).powf(2.0 * alpha)).exp())
}

/// `∫ Γ_e(t) exp(-∫_t^∞ (Γ_r + Γ_e)) dt` over the whole sweep, with the exact frame rates.
fn activation_integral(p: &LzParams, kind: LzCoupling, bath: &BathSpec) -> Result<f64> {
    if bath.temperature == 0.0 || bath.alpha == 0.0 {
        return Ok(0.0);
    }
    let tol = Tolerance { abs: 1e-12, rel: 1e-11 };
    let rates = |t: f64| lz_rates(kind, &lz_frame(t, p), bath);
    let total = |t: f64| rates(t).map(|r| r.total_flip()).unwrap_or(f64::NAN);
    let tail = integrate_to_infinity(total, 0.0, tol)?;
    // Γ is even in t, so ∫_t^∞ = tail ∓ ∫_0^|t|.
    let outer = |s: f64| {
        let ge = rates(s).map(|r| r.gamma_e).unwrap_or(f64::NAN);
        if ge == 0.0 {
            return 0.0;
        }
        let c = integrate(total, 0.0, s, tol).unwrap_or(f64::NAN);
        ge * ((c - tail).exp() + (-c - tail).exp())
    };
    integrate_to_infinity(outer, 0.0, Tolerance { abs: 1e-10, rel: 1e-9 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiniteTMethod {
    /// Numerical double integral over the exact transverse rates.
    Quadrature,
    LowT,
    HighT,
}

/// Excitation probability after a transverse-coupled sweep at temperature `T`.
pub fn lz_finite_t_p(
    alpha: f64,
    v: f64,
    delta: f64,
    temperature: f64,
    e_cutoff: f64,
    method: FiniteTMethod,
) -> Result<Estimate> {
    let p = LzParams::new(delta, v)?;
    let bath = BathSpec::new(alpha, Cutoff::Finite(e_cutoff), temperature)?;
    let pi = lz_zero_t_suppression(alpha, v, delta, e_cutoff)?.pi_factor;
    let d = p.delta;
    let est = match method {
        FiniteTMethod::Quadrature => {
            return Ok(Estimate::new(activation_integral(&p, LzCoupling::Transverse, &bath)?));
        }
        FiniteTMethod::LowT => {
            let value = if temperature == 0.0 {
                0.0
            } else {
                2.0 * PI * alpha * d * d / v * (PI * temperature / (2.0 * d)).sqrt() * (-d / temperature).exp() * pi
            };
            Estimate::new(value).warn_if(temperature > 0.5 * d, || format!("low-T form used at T = {temperature} (needs T << Δ)"))
        }
        FiniteTMethod::HighT => Estimate::new(2.0 * PI * PI * alpha * temperature * d / v * pi)
            .warn_if(temperature < 2.0 * d, || format!("high-T form used at T = {temperature} (needs T >> Δ)")),
    };
    let delta_i1 = PI * PI * alpha * d * temperature / v;
    Ok(est
        .warn_if(alpha > 0.1, || format!("alpha = {alpha} is not << 1"))
        .warn_if(delta_i1 >= 1.0, || format!("δI₁ = {delta_i1:.3} >= 1: relaxation during activation not negligible")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LongitudinalMethod {
    /// Numerical double integral over the exact longitudinal rates, no cutoff.
    Quadrature,
    LowT,
    HighT,
    Linear,
}

/// Excitation probability after a sweep with coupling along the control field.
pub fn lz_longitudinal_p(alpha: f64, v: f64, delta: f64, temperature: f64, method: LongitudinalMethod) -> Result<Estimate> {
    let p = LzParams::new(delta, v)?;
    let bath = BathSpec::new(alpha, Cutoff::Infinite, temperature)?;
    let d = p.delta;
    let x = alpha * temperature * v / d.powi(3);
    let high_t_warning = || format!("high-T form used at T = {temperature} (needs T >> Δ)");
    Ok(match method {
        LongitudinalMethod::Quadrature => Estimate::new(activation_integral(&p, LzCoupling::Longitudinal, &bath)?),
        LongitudinalMethod::LowT => {
            let value = if temperature == 0.0 {
                0.0
            } else {
                alpha * v * (PI.powi(3) / (32.0 * temperature * d.powi(3))).sqrt()
                    * (-d / temperature).exp()
                    * (-2.0 * PI * alpha * v / (3.0 * d * d)).exp()
            };
            Estimate::new(value).warn_if(temperature > 0.5 * d, || format!("low-T form used at T = {temperature} (needs T << Δ)"))
        }
        LongitudinalMethod::HighT => Estimate::new(0.5 * (1.0 - (-0.75 * PI * PI * x).exp()))
            .warn_if(temperature < 2.0 * d, high_t_warning)
            .warn_if(v > d * d, || format!("v = {v} is not << Δ²")),
        LongitudinalMethod::Linear => Estimate::new(0.375 * PI * PI * x)
            .warn_if(temperature < 2.0 * d, high_t_warning)
            .warn_if(x > 0.05, || format!("αTv/Δ³ = {x:.3} is not small")),
    })
}

/// `R(x) = (2 + (x²-2)√(x²+1)) / (x³√(x²+1))`, with `R(0) = 0` and `R ≈ 3x/4` near 0.
///
/// Below `x = 1` the rationalized form `x(3-x²)/(s(2 + (2-x²)s))`, `s = √(1+x²)`,
/// avoids the cancellation in the numerator.
pub fn r_function(x: f64) -> f64 {
    let s = x.mul_add(x, 1.0).sqrt();
    if x.abs() < 1.0 {
        x * (3.0 - x * x) / (s * (2.0 + (2.0 - x * x) * s))
    } else {
        (2.0 + (x * x - 2.0) * s) / (x.powi(3) * s)
    }
}

/// `P = ½[1 - exp(-(πv/2Δ²) R(γ/Δ))]` for the dephasing model.
pub fn lindblad_lz_p(v: f64, delta: f64, gamma: f64) -> Result<f64> {
    let p = LzParams::new(delta, v)?;
    if !(gamma >= 0.0) {
        return Err(Error::Domain(format!("gamma must be >= 0, got {gamma}")));
    }
    Ok(0.5 * (1.0 - (-PI * p.v / (2.0 * p.delta * p.delta) * r_function(gamma / p.delta)).exp()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn ideal_examples() {
        assert_abs_diff_eq!(lz_ideal_probability(0.5, 1.0).unwrap(), 0.043214, epsilon = 1e-6);
        assert_abs_diff_eq!(lz_ideal_probability(1.0, 1.0).unwrap(), 0.20788, epsilon = 1e-5);
        assert!(lz_ideal_probability(1e-3, 1.0).unwrap() < 1e-300);
    }

    #[test]
    fn suppression_examples() {
        let s = lz_zero_t_suppression(0.05, 0.5, 1.0, 10.0).unwrap();
        assert_abs_diff_eq!(s.exponent, 0.31416, epsilon = 1e-5);
        assert_abs_diff_eq!(s.pi_factor, 0.4677, epsilon = 1e-4);
        assert_eq!(lz_zero_t_suppression(0.0, 0.5, 1.0, 10.0).unwrap().pi_factor, 1.0);
    }

    #[test]
    fn zero_t_forms() {
        assert_eq!(lz_power_law(2.0, 0.0, 0.5, 1.0, 0.3).unwrap(), 0.3);
        let ratio = lz_power_law(20.0, 0.05, 0.5, 1.0, 1.0).unwrap() / lz_power_law(10.0, 0.05, 0.5, 1.0, 1.0).unwrap();
        assert_abs_diff_eq!(ratio.ln() / 2f64.ln(), -0.1 * PI, epsilon = 1e-12);
        let p = lz_zero_t_p_inf(0.05, 0.5, 1.0, 10.0, None).unwrap();
        assert_abs_diff_eq!(p, (-PI).exp() * 0.4677, epsilon = 1e-5);
        assert_eq!(lz_zero_t_p_inf(0.05, 0.5, 1.0, 10.0, Some(0.0)).unwrap(), 0.0);
    }

    #[test]
    fn renormalized_gap_examples() {
        assert_eq!(renormalized_gap(0.0, 1.0, 10.0).unwrap(), 1.0);
        assert_abs_diff_eq!(renormalized_gap(0.1, 1.0, 10.0).unwrap(), 0.774, epsilon = 1e-3);
        assert!(renormalized_gap(1.0, 1.0, 10.0).is_err());
    }

    #[test]
    fn strong_coupling_reduces_to_power_law() {
        // Compare shapes normalized at t = 5: C' and C drop out.
        let (alpha, v) = (0.01, 0.5);
        let exponent = PI * alpha / v;
        let reference = strong_coupling_decay(5.0, alpha, v, 1.0, 10.0, 1.0).unwrap();
        for t in [10.0, 20.0, 50.0] {
            let shape = strong_coupling_decay(t, alpha, v, 1.0, 10.0, 1.0).unwrap() / reference;
            let power = (t / 5.0f64).powf(-exponent);
            assert!((shape / power - 1.0).abs() < 0.02, "t = {t}: {shape} vs {power}");
        }
    }

    #[test]
    fn finite_t_examples() {
        let low = lz_finite_t_p(0.05, 0.5, 1.0, 0.0, 10.0, FiniteTMethod::LowT).unwrap();
        assert_eq!(low.value, 0.0);
        let low = lz_finite_t_p(0.05, 0.5, 1.0, 0.25, 10.0, FiniteTMethod::LowT).unwrap();
        assert_abs_diff_eq!(low.value, 0.00337, epsilon = 1e-5);
        assert!(low.is_valid());
        let high = lz_finite_t_p(0.05, 0.5, 1.0, 0.25, 10.0, FiniteTMethod::HighT).unwrap();
        assert!(!high.is_valid());
    }

    #[test]
    fn finite_t_quadrature_increases_with_temperature() {
        let mut last = 0.0;
        for t in [0.25, 0.5, 1.0, 2.0, 3.0] {
            let p = lz_finite_t_p(0.05, 0.5, 1.0, t, 10.0, FiniteTMethod::Quadrature).unwrap().value;
            assert!(p > last, "T = {t}: {p} <= {last}");
            last = p;
        }
    }

    #[test]
    fn longitudinal_examples() {
        let low = lz_longitudinal_p(0.05, 0.5, 1.0, 0.25, LongitudinalMethod::LowT).unwrap();
        assert_abs_diff_eq!(low.value, 8.56e-4, epsilon = 1e-6);
        let high = lz_longitudinal_p(0.05, 0.5, 1.0, 2.0, LongitudinalMethod::HighT).unwrap();
        assert_abs_diff_eq!(high.value, 0.1547, epsilon = 1e-4);
        let mut last = f64::INFINITY;
        for t in [1.0, 0.1, 0.01, 0.001] {
            let h = lz_longitudinal_p(0.05, 0.5, 1.0, t, LongitudinalMethod::HighT).unwrap().value;
            let l = lz_longitudinal_p(0.05, 0.5, 1.0, t, LongitudinalMethod::Linear).unwrap().value;
            let gap = (l / h - 1.0).abs();
            assert!(gap < last);
            last = gap;
        }
        assert!(last < 1e-3);
    }

    #[test]
    fn r_function_examples() {
        assert_abs_diff_eq!(r_function(1.14), 0.42, epsilon = 0.005);
        assert_abs_diff_eq!(r_function(0.01) / 0.01, 0.75, epsilon = 1e-3);
        assert_eq!(r_function(0.0), 0.0);
        let r = r_function(1.14);
        assert_abs_diff_eq!(lindblad_lz_p(0.5, 1.0, 1.14).unwrap(), 0.5 * (1.0 - (-PI / 4.0 * r).exp()), epsilon = 1e-15);
        assert_abs_diff_eq!(lindblad_lz_p(0.5, 1.0, 1.14).unwrap(), 0.13977, epsilon = 1e-5);
    }

    #[test]
    fn lindblad_small_v_limit() {
        for gamma in [0.5, 1.14, 3.0] {
            let v = 1e-4;
            let p = lindblad_lz_p(v, 1.0, gamma).unwrap();
            let lin = PI * v / 4.0 * r_function(gamma);
            assert!((p / lin - 1.0).abs() < 1e-3);
        }
    }

    proptest! {
        #[test]
        fn r_forms_agree_near_switch(x in 0.5f64..2.0) {
            let s = (1.0 + x * x).sqrt();
            let direct = (2.0 + (x * x - 2.0) * s) / (x.powi(3) * s);
            prop_assert!((r_function(x) - direct).abs() < 1e-13);
        }

        #[test]
        fn suppression_monotone(a in 0.0f64..0.3, da in 1e-3f64..0.1, ec in 2.0f64..100.0) {
            let s1 = lz_zero_t_suppression(a, 0.5, 1.0, ec).unwrap().pi_factor;
            let s2 = lz_zero_t_suppression(a + da, 0.5, 1.0, ec).unwrap().pi_factor;
            let s3 = lz_zero_t_suppression(a + da, 0.5, 1.0, ec * 2.0).unwrap().pi_factor;
            prop_assert!(s2 < s1);
            prop_assert!(s3 < s2);
        }
    }
}
