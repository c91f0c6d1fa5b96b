//! Turns a resolved [`RunConfig`] into a sampled trajectory.

use tlsdyn::dynamics::lz_default_window;
use tlsdyn::{
    change_basis, evolve_br_lz, evolve_joint, evolve_lindblad_dephasing, evolve_rate_equation, evolve_rotating_br,
    lz_frame, lz_rates, BathSpec, Basis, Cutoff, CutoffTreatment, Error, FrameProvider, LindbladScenario, LzCoupling,
    LzParams, Observables, OscillatorModel, QubitState, RateSet, RotatingFieldParams, SolverConfig,
};

use crate::config::{Equation, Initial, RunConfig, ScenarioKind};

/// Gap; every energy is in units of it.
const DELTA: f64 = 1.0;

/// Why a run stopped. Maps onto the process exit code.
#[derive(Debug)]
pub enum Failure {
    Config(String),
    Solver(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Config(_) => 1,
            Failure::Solver(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Config(m) | Failure::Solver(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match &e {
            Error::Solver(s) => Failure::Solver(format!("solver failed at t = {}: {e}", s.time())),
            Error::Truncation { .. } => Failure::Solver(e.to_string()),
            _ => Failure::Config(e.to_string()),
        }
    }
}

/// One output row: `t,mx,my,mz,pe,gamma_r,gamma_e,gamma_2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Record {
    pub t: f64,
    pub obs: Observables,
    pub rates: RateSet,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub records: Vec<Record>,
    pub warnings: Vec<String>,
}

fn bath(cfg: &RunConfig) -> Result<BathSpec, Failure> {
    let p = &cfg.params;
    let ec = p.ec.unwrap_or(f64::INFINITY);
    let cutoff = if ec.is_infinite() { Cutoff::Infinite } else { Cutoff::Finite(ec) };
    Ok(BathSpec::new(p.alpha.unwrap_or(0.0), cutoff, p.temp.unwrap_or(0.0))?.with_j0(p.j0.unwrap_or(0.0))?)
}

fn solver(cfg: &RunConfig, window: (f64, f64)) -> SolverConfig {
    let s = &cfg.solver;
    let mut out = SolverConfig::window(s.t_start.unwrap_or(window.0), s.t_final.unwrap_or(window.1))
        .with_samples(s.samples.unwrap_or(1001))
        .with_tolerances(s.rel_tol.unwrap_or(1e-8), s.abs_tol.unwrap_or(1e-10));
    out.method = s.method.unwrap_or_default();
    if let Some(h) = s.max_step {
        out.max_step = h;
    }
    if let Some(h) = s.initial_step {
        out.initial_step = h;
    }
    out
}

/// Default window for scenarios without a natural end.
fn rotating_window(cfg: &RunConfig) -> (f64, f64) {
    match cfg.scenario {
        ScenarioKind::LindbladRotate => (0.0, 100.0),
        _ => (0.0, 80.0),
    }
}

fn lz_window(cfg: &RunConfig, p: &LzParams, bath: &BathSpec) -> (f64, f64) {
    let (lo, hi) = lz_default_window(p, bath);
    match (cfg.solver.t_final_ec, bath.cutoff) {
        (Some(k), Cutoff::Finite(ec)) => (lo.min(-k * ec / p.v), k * ec / p.v),
        _ => (lo, hi),
    }
}

fn records_of(traj: &tlsdyn::Trajectory) -> Vec<Record> {
    traj.times
        .iter()
        .zip(&traj.observables)
        .zip(&traj.rates)
        .map(|((&t, &obs), &rates)| Record { t, obs, rates })
        .collect()
}

/// Runs one simulation. `cfg` must already be resolved.
pub fn run(cfg: &RunConfig) -> Result<RunOutput, Failure> {
    let p = &cfg.params;
    let basis = p.basis.unwrap_or(Basis::Diabatic);
    // Propagate in a rotated frame; diabatic output is converted afterwards.
    let frame_basis = if basis == Basis::Diabatic { Basis::Eigen } else { basis };
    let (traj, provider): (tlsdyn::Trajectory, Box<dyn FrameProvider>) = match cfg.scenario {
        ScenarioKind::Rotate => {
            let field = RotatingFieldParams::new(DELTA, p.omega.unwrap_or(0.1))?;
            let bath = bath(cfg)?;
            let initial = match p.initial.unwrap_or(Initial::Ground) {
                Initial::Ground => QubitState::ground(),
                Initial::Thermal => QubitState::thermal(DELTA, bath.temperature),
            };
            let sc = solver(cfg, rotating_window(cfg));
            let mode = p.coupling.unwrap_or(tlsdyn::CouplingMode::PerpY);
            (evolve_rotating_br(&field, mode, &bath, frame_basis, &initial, &sc)?, Box::new(field))
        }
        ScenarioKind::Lz => {
            let lz = LzParams::new(DELTA, p.v.unwrap_or(0.5))?;
            let bath = bath(cfg)?;
            let kind = LzCoupling::try_from(p.coupling.unwrap_or(tlsdyn::CouplingMode::InPlaneZ))?;
            let sc = solver(cfg, lz_window(cfg, &lz, &bath));
            if p.equation == Some(Equation::RateEquation) {
                return rate_equation(&lz, kind, &bath, basis, &sc);
            }
            (evolve_br_lz(&lz, kind, &bath, frame_basis, &sc)?, Box::new(lz))
        }
        ScenarioKind::Oscillator => {
            let field = RotatingFieldParams::new(DELTA, p.omega.unwrap_or(0.1))?;
            let model = OscillatorModel {
                omega0: p.omega0.unwrap_or(1.0),
                lambda: p.lambda.unwrap_or(0.1),
                kappa: p.kappa.unwrap_or(0.2),
                n_fock: p.n_fock.unwrap_or(10),
                temperature: p.temp.unwrap_or(0.0),
                auto_grow: true,
            };
            let sc = solver(cfg, rotating_window(cfg));
            let mode = p.coupling.unwrap_or(tlsdyn::CouplingMode::PerpY);
            (evolve_joint(&model, &field, mode, &sc)?, Box::new(field))
        }
        ScenarioKind::LindbladRotate => {
            let field = RotatingFieldParams::new(DELTA, p.omega.unwrap_or(0.1))?;
            let sc = solver(cfg, rotating_window(cfg));
            let traj = evolve_lindblad_dephasing(&LindbladScenario::Rotating(field), p.gamma.unwrap_or(0.0), &sc)?;
            (traj, Box::new(field))
        }
        ScenarioKind::LindbladLz => {
            let lz = LzParams::new(DELTA, p.v.unwrap_or(0.5))?;
            let sc = solver(cfg, lz_default_window(&lz, &BathSpec::decoupled()));
            let traj = evolve_lindblad_dephasing(&LindbladScenario::LandauZener(lz), p.gamma.unwrap_or(0.0), &sc)?;
            (traj, Box::new(lz))
        }
    };
    let out = if traj.basis == basis { traj } else { change_basis(&traj, provider.as_ref(), basis)? };
    Ok(RunOutput { records: records_of(&out), warnings: out.warnings })
}

/// Population rate equation; only defined in the eigenbasis.
fn rate_equation(
    lz: &LzParams,
    kind: LzCoupling,
    bath: &BathSpec,
    basis: Basis,
    sc: &SolverConfig,
) -> Result<RunOutput, Failure> {
    if basis != Basis::Eigen {
        return Err(Failure::Config("params.basis: the rate equation only yields eigenbasis populations".into()));
    }
    let sol = evolve_rate_equation(lz, kind, bath, CutoffTreatment::default(), sc)?;
    let records = sol
        .times
        .iter()
        .zip(&sol.m)
        .map(|(&t, &m)| {
            let rates = lz_rates(kind, &lz_frame(t, lz), bath)?;
            Ok(Record { t, obs: Observables { mx: 0.0, my: 0.0, mz: m, pe: 0.5 * (1.0 - m) }, rates })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(RunOutput { records, warnings: sol.warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solver_errors_map_to_exit_2() {
        let e: Failure = Error::Solver(tlsdyn::SolverError::NonFinite { t: 3.5 }).into();
        assert_eq!(e.exit_code(), 2);
        assert!(e.message().contains("t = 3.5"));
        let e: Failure = Error::Validation("x".into()).into();
        assert_eq!(e.exit_code(), 1);
    }

    #[test]
    fn lz_window_follows_t_final_ec() {
        let mut cfg = RunConfig::new(ScenarioKind::Lz);
        cfg.solver.t_final_ec = Some(3.0);
        let cfg = cfg.resolve().unwrap();
        let lz = LzParams::new(1.0, 0.5).unwrap();
        let b = bath(&cfg).unwrap();
        assert_eq!(lz_window(&cfg, &lz, &b), (-80.0, 60.0));
    }
}
