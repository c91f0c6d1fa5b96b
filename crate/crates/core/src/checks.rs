//! Catalog of numerical-versus-analytic checks.
//!
//! Each check runs the propagators at fixed parameters and compares against a
//! closed form with a pinned tolerance. The acceptance test and the CLI
//! `oracle-check` command both run from this table.

use std::f64::consts::PI;

use serde::Serialize;

use crate::analytics::{
    appendix_integrals, closed_form_my, lindblad_lz_p, lindblad_rotation_forms, lz_finite_t_p, lz_ideal_probability,
    lz_longitudinal_p, lz_zero_t_suppression, modified_bessel_k0, r_function, steady_state_my, FiniteTMethod,
    LongitudinalMethod,
};
use crate::bath::{BathSpec, Cutoff};
use crate::coupling::CouplingMode;
use crate::dynamics::{
    evolve_br_lz, evolve_lindblad_dephasing, evolve_rate_equation, evolve_rotating_br, lab_frame_observables,
    lz_default_window, LindbladScenario, StepDiagnostics, Trajectory,
};
use crate::error::{Error, Result};
use crate::frames::{rotating_frame, Basis, LzParams, RotatingFieldParams};
use crate::ode::SolverConfig;
use crate::oscillator::{evolve_joint, OscillatorModel};
use crate::quad::{integrate_to_infinity, Tolerance};
use crate::rates::{rotating_rates, CutoffTreatment, LzCoupling};
use crate::state::{thermal_polarization, QubitState};

/// How `observed` is compared with `expected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    /// `|observed - expected| <= tolerance`.
    Absolute,
    /// `|observed/expected - 1| <= tolerance`.
    Relative,
    /// `observed < tolerance`; `expected` is 0.
    Below,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Measurement {
    pub label: String,
    pub observed: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub comparison: Comparison,
    pub passed: bool,
}

impl Measurement {
    fn new(label: impl Into<String>, observed: f64, expected: f64, tolerance: f64, comparison: Comparison) -> Self {
        let passed = match comparison {
            Comparison::Absolute => (observed - expected).abs() <= tolerance,
            Comparison::Relative => (observed / expected - 1.0).abs() <= tolerance,
            Comparison::Below => observed < tolerance,
        };
        Measurement { label: label.into(), observed, expected, tolerance, comparison, passed: passed && observed.is_finite() }
    }

    fn absolute(label: impl Into<String>, observed: f64, expected: f64, tolerance: f64) -> Self {
        Measurement::new(label, observed, expected, tolerance, Comparison::Absolute)
    }

    fn relative(label: impl Into<String>, observed: f64, expected: f64, tolerance: f64) -> Self {
        Measurement::new(label, observed, expected, tolerance, Comparison::Relative)
    }

    fn below(label: impl Into<String>, observed: f64, bound: f64) -> Self {
        Measurement::new(label, observed, 0.0, bound, Comparison::Below)
    }

    /// The deviation that is compared with `tolerance`.
    pub fn deviation(&self) -> f64 {
        match self.comparison {
            Comparison::Absolute => (self.observed - self.expected).abs(),
            Comparison::Relative => (self.observed / self.expected - 1.0).abs(),
            Comparison::Below => self.observed,
        }
    }
}

/// Outcome of one catalog entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: &'static str,
    pub criterion: u8,
    pub title: &'static str,
    pub measurements: Vec<Measurement>,
    /// Step diagnostics merged over every propagation the check ran.
    pub diagnostics: StepDiagnostics,
    pub error: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.measurements.iter().all(|m| m.passed)
    }
}

type Runner = fn(&mut StepDiagnostics) -> Result<Vec<Measurement>>;

#[derive(Debug)]
pub struct Check {
    pub id: &'static str,
    pub criterion: u8,
    pub title: &'static str,
    run: Runner,
}

impl Check {
    pub fn run(&self) -> CheckReport {
        let mut diagnostics = StepDiagnostics::default();
        let (measurements, error) = match (self.run)(&mut diagnostics) {
            Ok(m) => (m, None),
            Err(e) => (Vec::new(), Some(e.to_string())),
        };
        CheckReport { id: self.id, criterion: self.criterion, title: self.title, measurements, diagnostics, error }
    }
}

pub const CATALOG: &[Check] = &[
    Check { id: "lz-ideal", criterion: 1, title: "unitary Landau-Zener probability", run: lz_ideal },
    Check { id: "rotation-closed-form", criterion: 2, title: "rotating-field m_y closed form", run: rotation_closed_form },
    Check { id: "my-universal", criterion: 3, title: "universal steady m_y", run: my_universal },
    Check { id: "power-law", criterion: 4, title: "zero-temperature power-law decay", run: power_law },
    Check { id: "cutoff-saturation", criterion: 5, title: "saturation above the cutoff", run: cutoff_saturation },
    Check { id: "br-vs-rate", criterion: 6, title: "Bloch-Redfield vs rate equation at high T", run: br_vs_rate },
    Check { id: "finite-t-closed-forms", criterion: 7, title: "finite-T activation closed forms", run: finite_t_closed_forms },
    Check { id: "longitudinal-lz", criterion: 8, title: "longitudinal coupling P_inf", run: longitudinal_lz },
    Check { id: "lindblad-lz", criterion: 9, title: "Lindblad dephasing Landau-Zener", run: lindblad_lz },
    Check { id: "lindblad-rotation", criterion: 10, title: "Lindblad dephasing under rotation", run: lindblad_rotation },
    Check { id: "oscillator-universal", criterion: 11, title: "damped-oscillator steady m_y", run: oscillator_universal },
    Check { id: "appendix-integrals", criterion: 12, title: "activation integrals and K0", run: appendix },
    Check { id: "structural", criterion: 13, title: "trace, Hermiticity, detailed balance on every step", run: structural },
];

pub fn ids() -> Vec<&'static str> {
    CATALOG.iter().map(|c| c.id).collect()
}

pub fn find(id: &str) -> Result<&'static Check> {
    CATALOG.iter().find(|c| c.id == id).ok_or_else(|| {
        Error::Config(format!("unknown check '{id}'; available: {}", ids().join(", ")))
    })
}

/// Structural bounds on merged step diagnostics.
pub fn structural_measurements(d: &StepDiagnostics) -> Vec<Measurement> {
    vec![
        Measurement::below("max |trace - 1|", d.max_trace_error, 1e-9),
        Measurement::below("max Hermiticity deviation", d.max_hermiticity_error, 1e-12),
        Measurement::below("max detailed-balance deviation", d.max_detailed_balance_error, 1e-12),
    ]
}

fn track(diag: &mut StepDiagnostics, traj: &Trajectory) {
    diag.merge(&traj.diagnostics);
}

const TIGHT: (f64, f64) = (1e-10, 1e-12);

fn lz_ideal(diag: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let mut out = Vec::new();
    for v in [0.25, 0.5, 1.0] {
        let p = LzParams::new(1.0, v)?;
        let cfg = SolverConfig::window(-200.0, 200.0).with_samples(2).with_tolerances(1e-9, 1e-11);
        let traj = evolve_br_lz(&p, LzCoupling::Transverse, &BathSpec::decoupled(), Basis::Eigen, &cfg)?;
        track(diag, &traj);
        out.push(Measurement::relative(format!("P_e(200), v = {v}"), traj.final_pe(), lz_ideal_probability(v, 1.0)?, 0.01));
    }
    Ok(out)
}

fn rotation_closed_form(diag: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let p = RotatingFieldParams::new(1.0, 0.1)?;
    let mut out = Vec::new();
    for (alpha, temp) in [(0.02, 0.0), (0.05, 0.0), (0.05, 0.5)] {
        let bath = BathSpec::new(alpha, Cutoff::Finite(10.0), temp)?;
        let m0 = thermal_polarization(p.w_gap(), temp);
        let start = QubitState::from_bloch([0.0, 0.0, m0])?;
        let cfg = SolverConfig::window(0.0, 100.0).with_samples(1001).with_tolerances(TIGHT.0, TIGHT.1);
        let traj = evolve_rotating_br(&p, CouplingMode::PerpY, &bath, Basis::Eigen, &start, &cfg)?;
        track(diag, &traj);
        let lab = lab_frame_observables(&traj, &p)?;
        let mut worst = 0.0f64;
        for (t, o) in lab.times.iter().zip(&lab.observables) {
            worst = worst.max((o.my - closed_form_my(*t, &p, &bath)?).abs());
        }
        out.push(Measurement::below(format!("max |m_y - closed form|, alpha = {alpha}, T = {temp}"), worst, 1e-6));
    }
    Ok(out)
}

fn my_universal(diag: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let p = RotatingFieldParams::new(1.0, 0.1)?;
    let period = 2.0 * PI / p.omega;
    let mut out = Vec::new();
    for mode in [CouplingMode::PerpY, CouplingMode::InPlaneZ] {
        for alpha in [0.02, 0.05, 0.1] {
            for temp in [0.0, 0.5, 1.0] {
                let bath = BathSpec::new(alpha, Cutoff::Finite(10.0), temp)?;
                // Rates of the in-plane coupling oscillate; use their period average.
                let n = 256;
                let mut gamma = 0.0;
                for k in 0..n {
                    let f = rotating_frame(period * k as f64 / n as f64, &p);
                    gamma += rotating_rates(mode, &f, &bath)?.total_flip() / n as f64;
                }
                let cfg = SolverConfig::window(0.0, 10.0 / gamma).with_samples(2).with_tolerances(1e-9, 1e-11);
                let traj = evolve_rotating_br(&p, mode, &bath, Basis::Eigen, &QubitState::ground(), &cfg)?;
                track(diag, &traj);
                let lab = lab_frame_observables(&traj, &p)?;
                out.push(Measurement::absolute(
                    format!("m_y(10/Gamma), {}, alpha = {alpha}, T = {temp}", mode.name()),
                    lab.last().my,
                    steady_state_my(&p, temp),
                    1e-3,
                ));
            }
        }
    }
    Ok(out)
}

/// Least-squares slope of `y` against `x`.
fn fitted_slope(points: impl Iterator<Item = (f64, f64)> + Clone) -> f64 {
    let n = points.clone().count() as f64;
    let (sx, sy) = points.clone().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / n, sy / n);
    let (num, den) = points.fold((0.0, 0.0), |(a, b), (x, y)| (a + (x - mx) * (y - my), b + (x - mx).powi(2)));
    num / den
}

/// Slope of `ln y` against `ln x`.
fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    fitted_slope(points.iter().map(|(x, y)| (x.ln(), y.ln())))
}

/// Slope of `ln y` against `x`.
fn log_linear_slope(points: &[(f64, f64)]) -> f64 {
    fitted_slope(points.iter().map(|(x, y)| (*x, y.ln())))
}

fn power_law(diag: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let (alpha, v) = (0.05, 0.5);
    let p = LzParams::new(1.0, v)?;
    let bath = BathSpec::new(alpha, Cutoff::Infinite, 0.0)?;
    let cfg = SolverConfig::window(-200.0, 50.0).with_samples(251).with_tolerances(TIGHT.0, TIGHT.1);
    let traj = evolve_br_lz(&p, LzCoupling::Transverse, &bath, Basis::Eigen, &cfg)?;
    track(diag, &traj);
    let points: Vec<(f64, f64)> = traj
        .times
        .iter()
        .zip(&traj.observables)
        .filter(|(t, _)| (5.0..=50.0).contains(*t))
        .map(|(t, o)| (*t, o.pe))
        .collect();
    let expected = -lz_zero_t_suppression(alpha, v, 1.0, 1.0)?.exponent;
    Ok(vec![Measurement::relative("log-log slope of P_e on [5, 50]", log_log_slope(&points), expected, 0.10)])
}

fn cutoff_saturation(diag: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let p = LzParams::new(1.0, 0.5)?;
    let bath = BathSpec::new(0.05, Cutoff::Finite(5.0), 0.0)?;
    let (t0, t1) = lz_default_window(&p, &bath);
    let mut cfg = SolverConfig::window(t0, t1).with_tolerances(TIGHT.0, TIGHT.1);
    cfg.samples = ((t1 - t0) as usize) + 1;
    let traj = evolve_br_lz(&p, LzCoupling::Transverse, &bath, Basis::Eigen, &cfg)?;
    track(diag, &traj);
    let at = |target: f64| {
        let k = traj.times.iter().position(|t| (t - target).abs() < 1e-9).expect("grid contains target");
        traj.observables[k].pe
    };
    Ok(vec![Measurement::below("|P_e(4E_c/v) - P_e(15)|", (at(t1) - at(15.0)).abs(), 1e-4)])
}

fn br_vs_rate(diag: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let p = LzParams::new(1.0, 0.5)?;
    let bath = BathSpec::new(0.05, Cutoff::Finite(10.0), 2.0)?;
    let (t0, t1) = lz_default_window(&p, &bath);
    let cfg = SolverConfig::window(t0, t1).with_samples(2).with_tolerances(1e-9, 1e-11);
    let br = evolve_br_lz(&p, LzCoupling::Transverse, &bath, Basis::Eigen, &cfg)?;
    track(diag, &br);
    let rate = evolve_rate_equation(&p, LzCoupling::Transverse, &bath, CutoffTreatment::Apply, &cfg)?;
    diag.merge(&rate.diagnostics);
    Ok(vec![Measurement::absolute("P_inf Bloch-Redfield vs rate equation", br.final_pe(), rate.p_inf, 0.02)])
}

fn finite_t_closed_forms(_: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let quad = |a, v, t| lz_finite_t_p(a, v, 1.0, t, 10.0, FiniteTMethod::Quadrature).map(|e| e.value);
    let low = lz_finite_t_p(0.05, 0.5, 1.0, 0.25, 10.0, FiniteTMethod::LowT)?.value;
    let high = lz_finite_t_p(0.005, 1.0, 1.0, 3.0, 10.0, FiniteTMethod::HighT)?.value;
    Ok(vec![
        Measurement::relative("low-T form vs quadrature, T = 0.25", low, quad(0.05, 0.5, 0.25)?, 0.15),
        Measurement::relative("high-T form vs quadrature, alpha = 0.005, T = 3, v = 1", high, quad(0.005, 1.0, 3.0)?, 0.15),
    ])
}

fn longitudinal_lz(diag: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let mut out = Vec::new();
    let p = LzParams::new(1.0, 0.5)?;
    let bath = BathSpec::new(0.05, Cutoff::Infinite, 2.0)?;
    let (t0, t1) = lz_default_window(&p, &bath);
    let cfg = SolverConfig::window(t0, t1).with_samples(2).with_tolerances(1e-9, 1e-11);
    let rate = evolve_rate_equation(&p, LzCoupling::Longitudinal, &bath, CutoffTreatment::Apply, &cfg)?;
    diag.merge(&rate.diagnostics);
    let high = lz_longitudinal_p(0.05, 0.5, 1.0, 2.0, LongitudinalMethod::HighT)?.value;
    out.push(Measurement::relative("rate-equation P_inf vs high-T form, T = 2", rate.p_inf, high, 0.05));

    let (alpha, v, temp) = (0.0025, 0.1, 20.0);
    let p = LzParams::new(1.0, v)?;
    let bath = BathSpec::new(alpha, Cutoff::Infinite, temp)?;
    let half = 10.0 * temp / v;
    let cfg = SolverConfig::window(-half, half).with_samples(2).with_tolerances(1e-9, 1e-12);
    let rate = evolve_rate_equation(&p, LzCoupling::Longitudinal, &bath, CutoffTreatment::Apply, &cfg)?;
    diag.merge(&rate.diagnostics);
    let linear = lz_longitudinal_p(alpha, v, 1.0, temp, LongitudinalMethod::Linear)?.value;
    out.push(Measurement::relative("rate-equation P_inf vs linear law, alpha T v = 0.005", rate.p_inf, linear, 0.10));
    Ok(out)
}

/// Maximizer of a unimodal function on `[a, b]` by golden-section search.
fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-10 {
        let (c, d) = (b - r * (b - a), a + r * (b - a));
        if f(c) > f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    0.5 * (a + b)
}

fn lindblad_lz(diag: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let mut out = Vec::new();
    for (v, gamma) in [(0.5, 2.5), (0.5, 4.0), (0.25, 1.25), (0.25, 2.5)] {
        let p = LzParams::new(1.0, v)?;
        let cfg = SolverConfig::window(-200.0, 200.0).with_samples(2).with_tolerances(1e-9, 1e-11);
        let traj = evolve_lindblad_dephasing(&LindbladScenario::LandauZener(p), gamma, &cfg)?;
        track(diag, &traj);
        out.push(Measurement::relative(
            format!("P_inf, v = {v}, gamma = {gamma}"),
            traj.final_pe(),
            lindblad_lz_p(v, 1.0, gamma)?,
            0.02,
        ));
    }
    let xm = golden_max(r_function, 0.5, 2.0);
    out.push(Measurement::relative("max R(x)", r_function(xm), 0.42, 0.01));
    out.push(Measurement::relative("argmax R(x)", xm, 1.14, 0.01));
    Ok(out)
}

fn lindblad_rotation(diag: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let (omega, gamma) = (0.1, 0.1);
    let p = RotatingFieldParams::new(1.0, omega)?;
    let forms = lindblad_rotation_forms(1.0, omega, gamma)?;
    let t_end = 10.0 / forms.decay_rate;
    let mut cfg = SolverConfig::window(0.0, t_end).with_tolerances(1e-9, 1e-12);
    cfg.samples = 2001;
    let traj = evolve_lindblad_dephasing(&LindbladScenario::Rotating(p), gamma, &cfg)?;
    track(diag, &traj);
    let lab = lab_frame_observables(&traj, &p)?;
    // Precession has died out after a few hundred 1/γ.
    let points: Vec<(f64, f64)> = lab
        .times
        .iter()
        .zip(&lab.observables)
        .filter(|(t, _)| **t >= 50.0 / gamma)
        .map(|(t, o)| (*t, o.my.abs()))
        .collect();
    let rate = -log_linear_slope(&points);
    let last = lab.last();
    let norm = (last.mx * last.mx + last.my * last.my + last.mz * last.mz).sqrt();
    Ok(vec![
        Measurement::relative("fitted decay rate of |m_y|", rate, forms.decay_rate, 0.05),
        Measurement::below("|m| at t = 10/rate", norm, 0.01),
    ])
}

fn oscillator_universal(diag: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let p = RotatingFieldParams::new(1.0, 0.1)?;
    let expected = -p.omega / p.w_gap();
    let period = 2.0 * PI / p.omega;
    let mut out = Vec::new();
    for mode in [CouplingMode::PerpY, CouplingMode::InPlaneZ] {
        let mut values = Vec::new();
        for (lambda, kappa) in [(0.1, 0.2), (0.05, 0.2), (0.1, 0.1), (0.05, 0.1)] {
            let model = OscillatorModel { lambda, kappa, ..OscillatorModel::default() };
            // Relaxation slows as λ²; scale the window accordingly.
            let t_end = 400.0 * (0.1f64 / lambda).powi(2);
            let cfg = SolverConfig::window(0.0, t_end).with_samples(2001).with_tolerances(1e-8, 1e-10);
            let traj = evolve_joint(&model, &p, mode, &cfg)?;
            track(diag, &traj);
            let lab = lab_frame_observables(&traj, &p)?;
            let late: Vec<f64> = lab
                .times
                .iter()
                .zip(&lab.observables)
                .filter(|(t, _)| **t >= t_end - period)
                .map(|(_, o)| o.my)
                .collect();
            let my = late.iter().sum::<f64>() / late.len() as f64;
            values.push(my);
            if (lambda, kappa) == (0.1, 0.2) {
                out.push(Measurement::absolute(format!("m_y(inf), {}, T = 0", mode.name()), my, expected, 2e-2));
            }
        }
        let spread = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
            - values.iter().cloned().fold(f64::INFINITY, f64::min);
        out.push(Measurement::below(format!("spread of m_y(inf) over lambda, kappa, {}", mode.name()), spread, 2e-2));
    }
    Ok(out)
}

fn appendix(_: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    let low = appendix_integrals(0.05, 0.5, 1.0, 0.2, 1000.0)?;
    let high = appendix_integrals(0.05, 0.5, 1.0, 100.0, f64::INFINITY)?;
    let slow = appendix_integrals(0.05, 0.05, 1.0, 2.0, 10.0)?;
    let base = appendix_integrals(0.05, 0.5, 1.0, 2.0, 10.0)?;
    let pair = |label: &str, p: crate::analytics::IntegralPair| Measurement::relative(label, p.closed, p.quadrature, 0.05);
    let mut worst_k0 = 0.0f64;
    for k in 0..=40 {
        let x = 1e-3 * (5e4f64).powf(k as f64 / 40.0);
        let reference = integrate_to_infinity(|t| (-x * t.cosh()).exp(), 0.0, Tolerance { abs: 0.0, rel: 1e-14 })?;
        worst_k0 = worst_k0.max((modified_bessel_k0(x)? / reference - 1.0).abs());
    }
    Ok(vec![
        pair("I1(0), T = 0.2, E_c = 1000", low.i1_zero),
        pair("I2 low-T, T = 0.2, E_c = 1000", low.i2_low_t),
        pair("I2 high-T, T = 100, no cutoff", high.i2_high_t),
        pair("I3, v = 0.05, T = 2", slow.i3),
        pair("longitudinal I1, v = 0.5", base.i1_longitudinal),
        Measurement::below("K0 max relative error on [1e-3, 50]", worst_k0, 1e-10),
    ])
}

fn structural(diag: &mut StepDiagnostics) -> Result<Vec<Measurement>> {
    for check in CATALOG.iter().filter(|c| c.id != "structural") {
        let report = check.run();
        if let Some(e) = report.error {
            return Err(Error::Config(format!("{} failed to run: {e}", check.id)));
        }
        diag.merge(&report.diagnostics);
    }
    Ok(structural_measurements(diag))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_are_unique() {
        let mut ids = ids();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), CATALOG.len());
        assert!(find("bogus").unwrap_err().to_string().contains("lz-ideal"));
    }

    #[test]
    fn slopes() {
        let pts: Vec<(f64, f64)> = (1..10).map(|k| (k as f64, 3.0 * (k as f64).powf(-0.7))).collect();
        assert!((log_log_slope(&pts) + 0.7).abs() < 1e-12);
        let pts: Vec<(f64, f64)> = (1..10).map(|k| (k as f64, 2.0 * (-0.3 * k as f64).exp())).collect();
        assert!((log_linear_slope(&pts) + 0.3).abs() < 1e-12);
        assert!((golden_max(|x| -(x - 1.3f64).powi(2), 0.0, 3.0) - 1.3).abs() < 1e-8);
    }

    #[test]
    fn measurement_verdicts() {
        assert!(Measurement::relative("r", 1.04, 1.0, 0.05).passed);
        assert!(!Measurement::absolute("a", 0.2, 0.0, 0.1).passed);
        assert!(!Measurement::below("b", f64::NAN, 1.0).passed);
    }
}
