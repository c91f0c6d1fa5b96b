//! Propagation of Bloch–Redfield, rate-equation and Lindblad dephasing systems.
//!
//! Sign convention everywhere: `ρ̇ = -i[H, ρ]`. In a frame with
//! `H = -(W/2) σz` the secular Bloch equations read
//!
//! ```text
//! ṁx =  W my - Γ₂ mx
//! ṁy = -W mx - Γ₂ my
//! ṁz = (Γr - Γe) - (Γr + Γe) mz
//! ```
//!
//! Full density-matrix propagation (Landau–Zener, Lindblad, adiabatic-basis
//! runs) uses the frame Hamiltonian including its gauge term, plus the
//! secular dissipator: populations exchange at `Γr`/`Γe`, coherences decay
//! at `Γ₂`.

use std::cell::RefCell;

use serde::{Deserialize, Serialize};

use crate::bath::{BathSpec, Cutoff};
use crate::coupling::CouplingMode;
use crate::error::{Error, Result};
use crate::frames::{effective_hamiltonian, Basis, FrameAngles, FrameProvider, LzParams, RotatingFieldParams, Scenario};
use crate::ode::{self, SolverConfig};
use crate::rates::{lz_rates, rate_equation_coefficient, rotating_rates, CutoffTreatment, LzCoupling, RateSet};
use crate::state::{bloch_to_matrix, hermiticity_error, Mat2, QubitState, C64};

/// Worst-case invariant violations seen on accepted integrator steps.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct StepDiagnostics {
    pub accepted_steps: usize,
    pub rejected_steps: usize,
    pub max_trace_error: f64,
    pub max_hermiticity_error: f64,
    /// Largest `|Γe/(Γr e^{-W/T}) - 1|`; at `T = 0`, largest `Γe/Γr`.
    pub max_detailed_balance_error: f64,
    /// Largest Bloch-vector length.
    pub max_bloch_norm: f64,
}

impl StepDiagnostics {
    pub fn merge(&mut self, other: &StepDiagnostics) {
        self.accepted_steps += other.accepted_steps;
        self.rejected_steps += other.rejected_steps;
        self.max_trace_error = self.max_trace_error.max(other.max_trace_error);
        self.max_hermiticity_error = self.max_hermiticity_error.max(other.max_hermiticity_error);
        self.max_detailed_balance_error = self.max_detailed_balance_error.max(other.max_detailed_balance_error);
        self.max_bloch_norm = self.max_bloch_norm.max(other.max_bloch_norm);
    }

    fn record_state(&mut self, state: &QubitState) {
        self.max_trace_error = self.max_trace_error.max(state.trace_error());
        self.max_hermiticity_error = self.max_hermiticity_error.max(state.hermiticity_error());
        let m = state.bloch();
        self.max_bloch_norm = self.max_bloch_norm.max((m[0] * m[0] + m[1] * m[1] + m[2] * m[2]).sqrt());
    }

    fn record_rates(&mut self, rates: &RateSet, gap: f64, temperature: Option<f64>) {
        let Some(temp) = temperature else { return };
        if rates.gamma_r <= 0.0 {
            return;
        }
        let err = if temp == 0.0 {
            rates.gamma_e / rates.gamma_r
        } else {
            let boltzmann = (-gap / temp).exp();
            if boltzmann == 0.0 {
                return;
            }
            (rates.gamma_e / (rates.gamma_r * boltzmann) - 1.0).abs()
        };
        self.max_detailed_balance_error = self.max_detailed_balance_error.max(err);
    }
}

/// Per-sample observables. `pe` is the excited-level population of the
/// trajectory's basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Observables {
    pub mx: f64,
    pub my: f64,
    pub mz: f64,
    pub pe: f64,
}

/// Excited-level populations of one state in the three representations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BasisPopulations {
    pub diabatic: f64,
    pub adiabatic: f64,
    pub eigen: f64,
}

/// Sampled solution of one propagation.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub scenario: Option<Scenario>,
    pub basis: Basis,
    pub times: Vec<f64>,
    pub states: Vec<QubitState>,
    pub observables: Vec<Observables>,
    pub rates: Vec<RateSet>,
    /// Filled by [`lab_frame_observables`].
    pub populations: Option<Vec<BasisPopulations>>,
    pub diagnostics: StepDiagnostics,
    pub warnings: Vec<String>,
}

impl Trajectory {
    pub(crate) fn assemble(
        scenario: Option<Scenario>,
        basis: Basis,
        times: Vec<f64>,
        states: Vec<QubitState>,
        rates: Vec<RateSet>,
        diagnostics: StepDiagnostics,
    ) -> Self {
        let observables = states.iter().map(observables_of).collect();
        Trajectory { scenario, basis, times, states, observables, rates, populations: None, diagnostics, warnings: Vec::new() }
    }

    pub fn last(&self) -> &Observables {
        self.observables.last().expect("trajectory has at least two samples")
    }

    pub fn final_pe(&self) -> f64 {
        self.last().pe
    }
}

fn observables_of(s: &QubitState) -> Observables {
    let m = s.bloch();
    Observables { mx: m[0], my: m[1], mz: m[2], pe: s.excited_population() }
}

/// Holds the first error raised inside an RHS so the observer can abort.
struct Deferred(RefCell<Option<Error>>);

impl Deferred {
    fn new() -> Self {
        Deferred(RefCell::new(None))
    }

    fn put(&self, e: Error) {
        self.0.borrow_mut().get_or_insert(e);
    }

    fn check(&self) -> Result<(), String> {
        match &*self.0.borrow() {
            Some(e) => Err(e.to_string()),
            None => Ok(()),
        }
    }

    /// The deferred error if one was raised, else `e`.
    fn take_or(&self, e: Error) -> Error {
        self.0.borrow_mut().take().unwrap_or(e)
    }
}

/// Integrates the secular Bloch equations for a diagonal frame Hamiltonian
/// `-(W(t)/2) σz` with rates from `rates`.
///
/// `temperature`, when given, enables the detailed-balance check in the
/// diagnostics.
pub fn evolve_br_secular<G, R>(
    initial: &QubitState,
    gap: G,
    rates: R,
    cfg: &SolverConfig,
    temperature: Option<f64>,
) -> Result<Trajectory>
where
    G: Fn(f64) -> f64,
    R: Fn(f64) -> Result<RateSet>,
{
    let deferred = Deferred::new();
    let rhs = |t: f64, m: &[f64], dm: &mut [f64]| {
        let w = gap(t);
        let r = match rates(t) {
            Ok(r) => r,
            Err(e) => {
                deferred.put(e);
                RateSet::default()
            }
        };
        dm[0] = w * m[1] - r.gamma_2 * m[0];
        dm[1] = -w * m[0] - r.gamma_2 * m[1];
        dm[2] = (r.gamma_r - r.gamma_e) - r.total_flip() * m[2];
    };
    let mut diag = StepDiagnostics::default();
    let observer = |t: f64, m: &[f64]| {
        deferred.check()?;
        diag.record_state(&QubitState::from_matrix_unchecked(bloch_to_matrix([m[0], m[1], m[2]])));
        if temperature.is_some() {
            let r = rates(t).map_err(|e| e.to_string())?;
            diag.record_rates(&r, gap(t), temperature);
        }
        Ok(())
    };
    let times = cfg.grid();
    let sol = ode::integrate(rhs, &initial.bloch(), cfg, &times, observer).map_err(|e| deferred.take_or(e))?;
    let states: Vec<QubitState> = sol
        .states
        .iter()
        .map(|m| QubitState::from_matrix_unchecked(bloch_to_matrix([m[0], m[1], m[2]])))
        .collect();
    let rate_samples = times.iter().map(|&t| rates(t)).collect::<Result<Vec<_>>>()?;
    diag.accepted_steps = sol.stats.accepted;
    diag.rejected_steps = sol.stats.rejected;
    Ok(Trajectory::assemble(None, Basis::Eigen, times, states, rate_samples, diag))
}

fn pack(rho: &Mat2) -> [f64; 8] {
    [
        rho[(0, 0)].re,
        rho[(0, 0)].im,
        rho[(0, 1)].re,
        rho[(0, 1)].im,
        rho[(1, 0)].re,
        rho[(1, 0)].im,
        rho[(1, 1)].re,
        rho[(1, 1)].im,
    ]
}

fn unpack(y: &[f64]) -> Mat2 {
    Mat2::new(C64::new(y[0], y[1]), C64::new(y[2], y[3]), C64::new(y[4], y[5]), C64::new(y[6], y[7]))
}

/// `-i[H, ρ]` evaluated as `-i(A - A†)` with `A = Hρ`, which is exactly
/// Hermitian in floating point.
pub(crate) fn commutator_term(h: &Mat2, rho: &Mat2) -> Mat2 {
    let a = h * rho;
    (a - a.adjoint()) * C64::new(0.0, -1.0)
}

/// Frame Hamiltonian, rates and level splitting at one instant.
pub(crate) struct Generator {
    pub hamiltonian: Mat2,
    pub rates: RateSet,
    pub gap: f64,
}

fn density_rhs(g: &Generator, rho: &Mat2) -> Mat2 {
    let mut d = commutator_term(&g.hamiltonian, rho);
    let r = &g.rates;
    let flow = r.gamma_r * rho[(1, 1)] - r.gamma_e * rho[(0, 0)];
    d[(0, 0)] += flow;
    d[(1, 1)] -= flow;
    d[(0, 1)] -= rho[(0, 1)] * r.gamma_2;
    d[(1, 0)] -= rho[(1, 0)] * r.gamma_2;
    d
}

/// Integrates `ρ̇ = -i[H, ρ] + D(ρ)` with the secular dissipator.
pub(crate) fn propagate_density<F>(
    initial: &QubitState,
    generator: F,
    cfg: &SolverConfig,
    temperature: Option<f64>,
) -> Result<(Vec<f64>, Vec<QubitState>, Vec<RateSet>, StepDiagnostics)>
where
    F: Fn(f64) -> Result<Generator>,
{
    let deferred = Deferred::new();
    let rhs = |t: f64, y: &[f64], dy: &mut [f64]| match generator(t) {
        Ok(g) => dy.copy_from_slice(&pack(&density_rhs(&g, &unpack(y)))),
        Err(e) => {
            deferred.put(e);
            dy.fill(0.0);
        }
    };
    let mut diag = StepDiagnostics::default();
    let observer = |t: f64, y: &[f64]| {
        deferred.check()?;
        diag.record_state(&QubitState::from_matrix_unchecked(unpack(y)));
        if temperature.is_some() {
            let g = generator(t).map_err(|e| e.to_string())?;
            diag.record_rates(&g.rates, g.gap, temperature);
        }
        Ok(())
    };
    let times = cfg.grid();
    let result = ode::integrate(rhs, &pack(initial.rho()), cfg, &times, observer);
    let sol = result.map_err(|e| deferred.take_or(e))?;
    let states = sol.states.iter().map(|y| QubitState::from_matrix_unchecked(unpack(y))).collect();
    let rates = times.iter().map(|&t| generator(t).map(|g| g.rates)).collect::<Result<Vec<_>>>()?;
    diag.accepted_steps = sol.stats.accepted;
    diag.rejected_steps = sol.stats.rejected;
    Ok((times, states, rates, diag))
}

fn require_frame_basis(basis: Basis) -> Result<()> {
    if basis == Basis::Diabatic {
        return Err(Error::Config(
            "Bloch-Redfield propagation needs a rotated basis (adiabatic or eigen); \
             use lab_frame_observables for diabatic output"
                .into(),
        ));
    }
    Ok(())
}

/// Bloch–Redfield run for the rotating field, returned in `basis`.
///
/// `Eigen` integrates the secular Bloch equations with the full `U₂U₁` rates;
/// `Adiabatic` keeps the `θ̇ σy` term of `H₁` and uses the `η = 0` rates.
/// `initial_lab` is the lab state at `cfg.t_start`.
pub fn evolve_rotating_br(
    p: &RotatingFieldParams,
    mode: CouplingMode,
    bath: &BathSpec,
    basis: Basis,
    initial_lab: &QubitState,
    cfg: &SolverConfig,
) -> Result<Trajectory> {
    require_frame_basis(basis)?;
    bath.validate()?;
    let start = crate::frames::rotating_frame(cfg.t_start, p);
    let initial = initial_lab.conjugated(&start.transform(basis));
    let temp = Some(bath.temperature);
    let mut traj = match basis {
        Basis::Eigen => evolve_br_secular(
            &initial,
            |t| crate::frames::rotating_frame(t, p).w_gap,
            |t| rotating_rates(mode, &crate::frames::rotating_frame(t, p), bath),
            cfg,
            temp,
        )?,
        _ => {
            let (times, states, rates, diag) = propagate_density(
                &initial,
                |t| {
                    let f = crate::frames::rotating_frame(t, p);
                    let f1 = f.u1_only();
                    Ok(Generator {
                        hamiltonian: effective_hamiltonian(&f, Basis::Adiabatic),
                        rates: rotating_rates(mode, &f1, bath)?,
                        gap: f1.w_gap,
                    })
                },
                cfg,
                temp,
            )?;
            Trajectory::assemble(None, Basis::Adiabatic, times, states, rates, diag)
        }
    };
    traj.scenario = Some(Scenario::Rotating);
    Ok(traj)
}

/// Default Landau–Zener window: `±4E_c/v`, or `±200/Δ` without a cutoff.
pub fn lz_default_window(p: &LzParams, bath: &BathSpec) -> (f64, f64) {
    let half = match bath.cutoff {
        Cutoff::Finite(ec) if bath.alpha > 0.0 => 4.0 * ec / p.v,
        _ => 200.0 / p.delta,
    };
    (-half, half)
}

fn check_lz_window(p: &LzParams, bath: &BathSpec, cfg: &SolverConfig) -> Result<Vec<String>> {
    let needed = -3.0 * p.delta.max(bath.temperature) / p.v;
    if cfg.t_start > needed {
        return Err(Error::Config(format!(
            "t_start = {} is too late for an asymptotic initial state; need t_start <= {needed}",
            cfg.t_start
        )));
    }
    let mut warnings: Vec<String> = p.warning().into_iter().collect();
    if let Cutoff::Finite(ec) = bath.cutoff {
        if bath.alpha > 0.0 && cfg.t_end < 3.0 * ec / p.v {
            warnings.push(format!(
                "t_end = {} < 3E_c/v = {}: final P_e is not a converged P_inf",
                cfg.t_end,
                3.0 * ec / p.v
            ));
        }
    }
    Ok(warnings)
}

/// Bloch–Redfield Landau–Zener run from the ground state, in `basis`
/// (`Eigen` keeps the `η̇ σx` gauge term; `Adiabatic` uses `H₁` with `η = 0` rates).
pub fn evolve_br_lz(p: &LzParams, kind: LzCoupling, bath: &BathSpec, basis: Basis, cfg: &SolverConfig) -> Result<Trajectory> {
    require_frame_basis(basis)?;
    bath.validate()?;
    let warnings = check_lz_window(p, bath, cfg)?;
    let (times, states, rates, diag) = propagate_density(
        &QubitState::ground(),
        |t| {
            let f = crate::frames::lz_frame(t, p);
            let rate_frame = if basis == Basis::Eigen { f } else { f.u1_only() };
            Ok(Generator {
                hamiltonian: effective_hamiltonian(&f, basis),
                rates: lz_rates(kind, &rate_frame, bath)?,
                gap: rate_frame.w_gap,
            })
        },
        cfg,
        Some(bath.temperature),
    )?;
    let mut traj = Trajectory::assemble(Some(Scenario::LandauZener), basis, times, states, rates, diag);
    traj.warnings = warnings;
    Ok(traj)
}

/// Solution of the population rate equation.
#[derive(Debug, Clone, PartialEq)]
pub struct RateEquationSolution {
    pub times: Vec<f64>,
    /// Eigen-frame polarization `m = ρ₀₀ - ρ₁₁`.
    pub m: Vec<f64>,
    /// `(1 - m(t_end))/2`.
    pub p_inf: f64,
    pub diagnostics: StepDiagnostics,
    pub warnings: Vec<String>,
}

/// `ṁ = Γ₀ (1 - m coth(W/2T))` from `m(t_start) = 1`.
pub fn evolve_rate_equation(
    p: &LzParams,
    kind: LzCoupling,
    bath: &BathSpec,
    cutoff: CutoffTreatment,
    cfg: &SolverConfig,
) -> Result<RateEquationSolution> {
    bath.validate()?;
    if bath.temperature == 0.0 {
        return Err(Error::Config(
            "the rate equation needs T > 0; use evolve_br_lz at zero temperature".into(),
        ));
    }
    let warnings = check_lz_window(p, bath, cfg)?;
    let temp = bath.temperature;
    let coefficients = |t: f64| -> Result<(f64, f64)> {
        let f = crate::frames::lz_frame(t, p);
        let g0 = rate_equation_coefficient(kind, &f, bath, cutoff)?;
        Ok((g0, 1.0 / (f.w_gap / (2.0 * temp)).tanh()))
    };
    let deferred = Deferred::new();
    let rhs = |t: f64, m: &[f64], dm: &mut [f64]| match coefficients(t) {
        Ok((g0, coth)) => dm[0] = g0 * (1.0 - m[0] * coth),
        Err(e) => {
            deferred.put(e);
            dm[0] = 0.0;
        }
    };
    let mut diag = StepDiagnostics::default();
    let observer = |t: f64, _m: &[f64]| {
        deferred.check()?;
        let f = crate::frames::lz_frame(t, p);
        let r = lz_rates(kind, &f, bath).map_err(|e| e.to_string())?;
        diag.record_rates(&r, f.w_gap, Some(temp));
        Ok(())
    };
    // Rates are negligible far from the crossing; keep the stepper from jumping over it.
    let mut capped = *cfg;
    capped.max_step = cfg.max_step.min(0.1 * p.delta / p.v);
    let times = cfg.grid();
    let sol = ode::integrate(rhs, &[1.0], &capped, &times, observer).map_err(|e| deferred.take_or(e))?;
    diag.accepted_steps = sol.stats.accepted;
    diag.rejected_steps = sol.stats.rejected;
    let m: Vec<f64> = sol.states.iter().map(|y| y[0]).collect();
    let p_inf = 0.5 * (1.0 - m.last().copied().unwrap_or(1.0));
    Ok(RateEquationSolution { times, m, p_inf, diagnostics: diag, warnings })
}

/// Scenario driving the Lindblad dephasing model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LindbladScenario {
    Rotating(RotatingFieldParams),
    LandauZener(LzParams),
}

impl LindbladScenario {
    fn frame(&self, t: f64) -> FrameAngles {
        match self {
            LindbladScenario::Rotating(p) => crate::frames::rotating_frame(t, p),
            LindbladScenario::LandauZener(p) => crate::frames::lz_frame(t, p),
        }
    }
}

/// Pure dephasing at rate `γ` in the adiabatic basis, `H₁ = -(E σz + g σy)/2`,
/// starting from the ground state.
///
/// `g` is the gauge coefficient of [`FrameAngles::adiabatic_gauge`], so the
/// result maps back to the lab consistently; the sign of `g` does not affect
/// Landau–Zener populations.
pub fn evolve_lindblad_dephasing(scenario: &LindbladScenario, gamma: f64, cfg: &SolverConfig) -> Result<Trajectory> {
    evolve_lindblad_signed(scenario, gamma, cfg, 1.0)
}

pub(crate) fn evolve_lindblad_signed(
    scenario: &LindbladScenario,
    gamma: f64,
    cfg: &SolverConfig,
    gauge_sign: f64,
) -> Result<Trajectory> {
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(Error::Validation(format!("gamma must be >= 0, got {gamma}")));
    }
    let mut warnings = Vec::new();
    if let LindbladScenario::LandauZener(p) = scenario {
        warnings = check_lz_window(p, &BathSpec::decoupled(), cfg)?;
    }
    let rates = RateSet { gamma_2: gamma, gamma_phi: gamma, ..RateSet::default() };
    let (times, states, rate_samples, diag) = propagate_density(
        &QubitState::ground(),
        |t| {
            let f = scenario.frame(t);
            let g = gauge_sign * f.adiabatic_gauge();
            let h = Mat2::new(
                C64::new(-0.5 * f.e_gap, 0.0),
                C64::new(0.0, 0.5 * g),
                C64::new(0.0, -0.5 * g),
                C64::new(0.5 * f.e_gap, 0.0),
            );
            Ok(Generator { hamiltonian: h, rates, gap: f.e_gap })
        },
        cfg,
        None,
    )?;
    let scenario_tag = match scenario {
        LindbladScenario::Rotating(_) => Scenario::Rotating,
        LindbladScenario::LandauZener(_) => Scenario::LandauZener,
    };
    let mut traj = Trajectory::assemble(Some(scenario_tag), Basis::Adiabatic, times, states, rate_samples, diag);
    traj.warnings = warnings;
    Ok(traj)
}

/// Rewrites a trajectory in the lab basis.
///
/// Observables become lab `m`; `pe` becomes the population of the lab state
/// `|1⟩` (rotation) or of the diabatic level that is excited after the
/// crossing, `|0⟩` (Landau–Zener). `populations` holds the excited-level
/// population in all three bases.
pub fn lab_frame_observables(traj: &Trajectory, provider: &dyn FrameProvider) -> Result<Trajectory> {
    if let Some(s) = traj.scenario {
        if s != provider.scenario() {
            return Err(Error::Config(format!(
                "trajectory belongs to {s:?} but the frame provider is {:?}",
                provider.scenario()
            )));
        }
    }
    let mut states = Vec::with_capacity(traj.states.len());
    let mut populations = Vec::with_capacity(traj.states.len());
    let mut observables = Vec::with_capacity(traj.states.len());
    for (t, state) in traj.times.iter().zip(&traj.states) {
        let f = provider.frame_at(*t);
        let lab = state.conjugated(&f.transform(traj.basis).adjoint());
        let adiabatic = lab.conjugated(&f.transform(Basis::Adiabatic)).excited_population();
        let eigen = lab.conjugated(&f.transform(Basis::Eigen)).excited_population();
        let diabatic = match provider.scenario() {
            Scenario::Rotating => lab.excited_population(),
            Scenario::LandauZener => 1.0 - lab.excited_population(),
        };
        populations.push(BasisPopulations { diabatic, adiabatic, eigen });
        let m = lab.bloch();
        observables.push(Observables { mx: m[0], my: m[1], mz: m[2], pe: diabatic });
        states.push(lab);
    }
    Ok(Trajectory {
        scenario: Some(provider.scenario()),
        basis: Basis::Diabatic,
        times: traj.times.clone(),
        states,
        observables,
        rates: traj.rates.clone(),
        populations: Some(populations),
        diagnostics: traj.diagnostics,
        warnings: traj.warnings.clone(),
    })
}

/// Largest violation of the trace and Hermiticity invariants over a trajectory's samples.
pub fn sample_invariant_errors(traj: &Trajectory) -> (f64, f64) {
    traj.states.iter().fold((0.0f64, 0.0f64), |(tr, h), s| {
        (tr.max(s.trace_error()), h.max(hermiticity_error(s.rho())))
    })
}

/// Re-expresses a trajectory in `basis`.
///
/// `Diabatic` is [`lab_frame_observables`]. For the rotated bases `pe` is the
/// upper-level population of that basis and `populations` is kept.
pub fn change_basis(traj: &Trajectory, provider: &dyn FrameProvider, basis: Basis) -> Result<Trajectory> {
    let lab = lab_frame_observables(traj, provider)?;
    if basis == Basis::Diabatic {
        return Ok(lab);
    }
    let states: Vec<QubitState> = lab
        .times
        .iter()
        .zip(&lab.states)
        .map(|(t, s)| s.conjugated(&provider.frame_at(*t).transform(basis)))
        .collect();
    Ok(Trajectory { basis, observables: states.iter().map(observables_of).collect(), states, ..lab })
}
