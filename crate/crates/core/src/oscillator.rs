//! Qubit coupled to a single damped harmonic mode.
//!
//! The joint density matrix lives on `qubit ⊗ Fock(n_fock)` with index
//! `q * n_fock + k`. The qubit is propagated in the adiabatic frame of the
//! rotating field; the oscillator dissipator is frame independent.

use std::cell::Cell;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::bath::planck_occupation;
use crate::coupling::{CouplingMode, CouplingSpec};
use crate::dynamics::{StepDiagnostics, Trajectory};
use crate::error::{Error, Result};
use crate::frames::{effective_hamiltonian, lab_direction, rotating_frame, Basis, RotatingFieldParams, Scenario};
use crate::ode::{self, SolverConfig};
use crate::rates::RateSet;
use crate::state::{pauli_components, paulis, Mat2, QubitState, C64};

type CMat = DMatrix<C64>;

/// Largest population allowed in the top Fock level.
pub const TRUNCATION_TOL: f64 = 1e-6;
const JOINT_TRACE_TOL: f64 = 1e-8;
const JOINT_HERMITICITY_TOL: f64 = 1e-10;
const PSD_FLOOR: f64 = -1e-7;
const MAX_FOCK: usize = 160;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OscillatorModel {
    pub omega0: f64,
    pub lambda: f64,
    pub kappa: f64,
    pub n_fock: usize,
    pub temperature: f64,
    /// Double `n_fock` and rerun when the top level leaks, instead of failing.
    pub auto_grow: bool,
}

impl Default for OscillatorModel {
    fn default() -> Self {
        OscillatorModel { omega0: 1.0, lambda: 0.1, kappa: 0.2, n_fock: 10, temperature: 0.0, auto_grow: true }
    }
}

impl OscillatorModel {
    pub fn validate(&self) -> Result<()> {
        if self.n_fock < 2 {
            return Err(Error::Validation(format!("n_fock must be >= 2, got {}", self.n_fock)));
        }
        if !(self.kappa >= 0.0 && self.kappa.is_finite()) {
            return Err(Error::Validation(format!("kappa must be finite and >= 0, got {}", self.kappa)));
        }
        if !self.lambda.is_finite() {
            return Err(Error::Validation(format!("lambda must be finite, got {}", self.lambda)));
        }
        if !(self.omega0 > 0.0 && self.omega0.is_finite()) {
            return Err(Error::Validation(format!("omega0 must be finite and > 0, got {}", self.omega0)));
        }
        if !(self.temperature >= 0.0 && self.temperature.is_finite()) {
            return Err(Error::Validation(format!("temperature must be finite and >= 0, got {}", self.temperature)));
        }
        Ok(())
    }

    /// Thermal occupation `N̄(ω₀)` of the mode.
    pub fn occupation(&self) -> Result<f64> {
        planck_occupation(self.omega0, self.temperature)
    }
}

/// Density matrix of qubit and oscillator.
#[derive(Debug, Clone, PartialEq)]
pub struct JointState {
    rho: CMat,
    n_fock: usize,
}

impl JointState {
    /// Validates trace, Hermiticity and positivity.
    pub fn new(rho: CMat, n_fock: usize) -> Result<Self> {
        if rho.nrows() != 2 * n_fock || rho.ncols() != 2 * n_fock {
            return Err(Error::Validation(format!(
                "joint matrix is {}x{}, expected {}x{}",
                rho.nrows(),
                rho.ncols(),
                2 * n_fock,
                2 * n_fock
            )));
        }
        let state = JointState { rho, n_fock };
        let tr = state.trace_error();
        if tr > JOINT_TRACE_TOL {
            return Err(Error::Validation(format!("joint trace deviates from 1 by {tr:.3e}")));
        }
        let herm = state.hermiticity_error();
        if herm > JOINT_HERMITICITY_TOL {
            return Err(Error::Validation(format!("joint matrix not Hermitian: deviation {herm:.3e}")));
        }
        let hermitian = (&state.rho + state.rho.adjoint()) * C64::new(0.5, 0.0);
        let min = hermitian.symmetric_eigenvalues().min();
        if min < PSD_FLOOR {
            return Err(Error::Validation(format!("joint matrix has eigenvalue {min:.3e}")));
        }
        Ok(state)
    }

    /// `σ ⊗ τ`.
    pub fn product(qubit: &QubitState, oscillator: &CMat) -> Result<Self> {
        let n = oscillator.nrows();
        let q = qubit.rho();
        let q = CMat::from_fn(2, 2, |i, j| q[(i, j)]);
        JointState::new(q.kronecker(oscillator), n)
    }

    pub fn rho(&self) -> &CMat {
        &self.rho
    }

    pub fn n_fock(&self) -> usize {
        self.n_fock
    }

    pub fn trace_error(&self) -> f64 {
        (self.rho.trace() - C64::new(1.0, 0.0)).norm()
    }

    pub fn hermiticity_error(&self) -> f64 {
        (&self.rho - self.rho.adjoint()).iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    /// Population of Fock level `n_fock - 1`.
    pub fn top_level_population(&self) -> f64 {
        let n = self.n_fock;
        self.rho[(n - 1, n - 1)].re + self.rho[(2 * n - 1, 2 * n - 1)].re
    }
}

/// Partial trace over the oscillator.
pub fn reduce_to_qubit(joint: &JointState) -> QubitState {
    QubitState::from_matrix_unchecked(partial_trace(&joint.rho, joint.n_fock))
}

fn partial_trace(rho: &CMat, n: usize) -> Mat2 {
    let mut q = Mat2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            q[(i, j)] = (0..n).map(|k| rho[(i * n + k, j * n + k)]).sum();
        }
    }
    q
}

/// Thermal state of the truncated oscillator, normalized on the kept levels.
pub fn oscillator_thermal_state(n_fock: usize, omega0: f64, temperature: f64) -> CMat {
    let weights: Vec<f64> = (0..n_fock)
        .map(|k| if temperature == 0.0 { if k == 0 { 1.0 } else { 0.0 } } else { (-(k as f64) * omega0 / temperature).exp() })
        .collect();
    let z: f64 = weights.iter().sum();
    CMat::from_fn(n_fock, n_fock, |i, j| if i == j { C64::new(weights[i] / z, 0.0) } else { C64::new(0.0, 0.0) })
}

struct Operators {
    a: CMat,
    a_dag: CMat,
    number: CMat,
    quadrature: CMat,
    id_o: CMat,
}

impl Operators {
    fn new(n: usize) -> Self {
        let a = CMat::from_fn(n, n, |i, j| if j == i + 1 { C64::new((j as f64).sqrt(), 0.0) } else { C64::new(0.0, 0.0) });
        let a_dag = a.adjoint();
        let number = &a_dag * &a;
        let quadrature = &a + &a_dag;
        let id_q = CMat::identity(2, 2);
        let lift = |op: &CMat| id_q.kronecker(op);
        Operators { a: lift(&a), a_dag: lift(&a_dag), number: lift(&number), quadrature: lift(&quadrature), id_o: CMat::identity(n, n) }
    }

    fn qubit(&self, m: &Mat2) -> CMat {
        CMat::from_fn(2, 2, |i, j| m[(i, j)]).kronecker(&self.id_o)
    }
}

fn pack(rho: &CMat, out: &mut [f64]) {
    for (k, z) in rho.iter().enumerate() {
        out[2 * k] = z.re;
        out[2 * k + 1] = z.im;
    }
}

fn unpack(y: &[f64], dim: usize) -> CMat {
    CMat::from_iterator(dim, dim, y.chunks_exact(2).map(|c| C64::new(c[0], c[1])))
}

/// Joint Lindblad evolution under the rotating field, reduced to the qubit.
///
/// Starts from the qubit ground state times the oscillator thermal state. The
/// returned trajectory is in the adiabatic basis; map it with
/// [`crate::lab_frame_observables`]. Its rate columns are zero: the mode is
/// treated exactly and has no Bloch–Redfield rates.
pub fn evolve_joint(
    model: &OscillatorModel,
    field: &RotatingFieldParams,
    mode: CouplingMode,
    cfg: &SolverConfig,
) -> Result<Trajectory> {
    model.validate()?;
    let mut n = model.n_fock;
    loop {
        match evolve_fixed(model, n, field, mode, cfg) {
            Err(Error::Truncation { .. }) if model.auto_grow && 2 * n <= MAX_FOCK => n *= 2,
            Ok(mut traj) => {
                if n != model.n_fock {
                    traj.warnings.push(format!("n_fock grown from {} to {n}", model.n_fock));
                }
                return Ok(traj);
            }
            Err(e) => return Err(e),
        }
    }
}

fn evolve_fixed(
    model: &OscillatorModel,
    n: usize,
    field: &RotatingFieldParams,
    mode: CouplingMode,
    cfg: &SolverConfig,
) -> Result<Trajectory> {
    let ops = Operators::new(n);
    let dim = 2 * n;
    let nbar = model.occupation()?;
    let down = 2.0 * model.kappa * (nbar + 1.0);
    let up = 2.0 * model.kappa * nbar;
    let coupling = CouplingSpec::new(mode);
    let h_osc = &ops.number * C64::new(model.omega0, 0.0) + CMat::identity(dim, dim) * C64::new(0.5 * model.omega0, 0.0);
    let decay_in = &ops.number * C64::new(0.5 * down, 0.0) + &ops.a * &ops.a_dag * C64::new(0.5 * up, 0.0);

    let hamiltonian = |t: f64| -> Result<CMat> {
        let f = rotating_frame(t, field).u1_only();
        let n_lab = lab_direction(&coupling, &f)?;
        let u = f.u1();
        let n_op = paulis().iter().zip(n_lab).fold(Mat2::zeros(), |acc, (s, c)| acc + s * C64::new(c, 0.0));
        let n_rot = pauli_components(&(u * n_op * u.adjoint()));
        let n_rot = paulis().iter().zip(n_rot).fold(Mat2::zeros(), |acc, (s, c)| acc + s * C64::new(c, 0.0));
        let h_q = ops.qubit(&effective_hamiltonian(&f, Basis::Adiabatic));
        let h_int = ops.qubit(&n_rot) * &ops.quadrature * C64::new(0.5 * model.lambda, 0.0);
        Ok(h_q + &h_osc + h_int)
    };

    let failure: Cell<Option<Error>> = Cell::new(None);
    let rhs = |t: f64, y: &[f64], dy: &mut [f64]| {
        let rho = unpack(y, dim);
        let h = match hamiltonian(t) {
            Ok(h) => h,
            Err(e) => {
                failure.set(Some(e));
                dy.fill(0.0);
                return;
            }
        };
        let a = &h * &rho;
        let mut d = (&a - a.adjoint()) * C64::new(0.0, -1.0);
        let anti = &decay_in * &rho;
        d -= &anti + anti.adjoint();
        d += (&ops.a * &rho * &ops.a_dag) * C64::new(down, 0.0);
        if up > 0.0 {
            d += (&ops.a_dag * &rho * &ops.a) * C64::new(up, 0.0);
        }
        let d = (&d + d.adjoint()) * C64::new(0.5, 0.0);
        pack(&d, dy);
    };

    let mut diag = StepDiagnostics::default();
    let mut leak = 0.0f64;
    let observer = |_t: f64, y: &[f64]| {
        if let Some(e) = failure.take() {
            let msg = e.to_string();
            failure.set(Some(e));
            return Err(msg);
        }
        let rho = unpack(y, dim);
        let state = JointState { rho, n_fock: n };
        diag.max_trace_error = diag.max_trace_error.max(state.trace_error());
        diag.max_hermiticity_error = diag.max_hermiticity_error.max(state.hermiticity_error());
        let m = reduce_to_qubit(&state).bloch();
        diag.max_bloch_norm = diag.max_bloch_norm.max((m[0] * m[0] + m[1] * m[1] + m[2] * m[2]).sqrt());
        let top = state.top_level_population();
        leak = leak.max(top);
        if top > TRUNCATION_TOL {
            return Err(format!("top Fock level population {top:.3e}"));
        }
        Ok(())
    };

    let initial = JointState::product(
        &QubitState::ground(),
        &oscillator_thermal_state(n, model.omega0, model.temperature),
    )?;
    let mut y0 = vec![0.0; 2 * dim * dim];
    pack(initial.rho(), &mut y0);
    let times = cfg.grid();
    let sol = ode::integrate(rhs, &y0, cfg, &times, observer);
    if let Some(e) = failure.take() {
        return Err(e);
    }
    if leak > TRUNCATION_TOL {
        return Err(Error::Truncation { n_fock: n, population: leak });
    }
    let sol = sol?;
    let states: Vec<QubitState> = sol
        .states
        .iter()
        .map(|y| QubitState::from_matrix_unchecked(partial_trace(&unpack(y, dim), n)))
        .collect();
    diag.accepted_steps = sol.stats.accepted;
    diag.rejected_steps = sol.stats.rejected;
    let rates = vec![RateSet::default(); times.len()];
    let mut traj = Trajectory::assemble(Some(Scenario::Rotating), Basis::Adiabatic, times, states, rates, diag);
    if model.temperature > 0.0 {
        traj.warnings.push(format!(
            "thermal oscillator dissipator (N̄ = {nbar:.6}) extends the zero-temperature model"
        ));
    }
    Ok(traj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn product_state_traces_back() {
        let q = QubitState::from_bloch([0.3, -0.2, 0.5]).unwrap();
        let osc = oscillator_thermal_state(4, 1.0, 0.7);
        let joint = JointState::product(&q, &osc).unwrap();
        let back = reduce_to_qubit(&joint);
        assert!((back.rho() - q.rho()).norm() < 1e-15);
    }

    #[test]
    fn maximally_mixed_reduces_to_mixed() {
        let n = 3;
        let rho = CMat::identity(2 * n, 2 * n) * C64::new(1.0 / (2 * n) as f64, 0.0);
        let q = reduce_to_qubit(&JointState::new(rho, n).unwrap());
        assert!(q.bloch().iter().all(|m| m.abs() < 1e-15));
        assert_abs_diff_eq!(q.purity(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn entangled_state_reduces_to_mixed() {
        // (|0,0> + |1,1>)/√2 in qubit ⊗ Fock(2).
        let n = 2;
        let mut psi = nalgebra::DVector::<C64>::zeros(2 * n);
        psi[0] = C64::new(0.5f64.sqrt(), 0.0);
        psi[n + 1] = C64::new(0.5f64.sqrt(), 0.0);
        let rho = &psi * psi.adjoint();
        let q = reduce_to_qubit(&JointState::new(rho, n).unwrap());
        assert!((q.rho() - Mat2::identity() * C64::new(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn joint_state_validation() {
        assert!(JointState::new(CMat::identity(4, 4), 2).is_err());
        let mut bad = CMat::identity(4, 4) * C64::new(0.25, 0.0);
        bad[(0, 1)] = C64::new(0.1, 0.0);
        assert!(JointState::new(bad, 2).is_err());
        let negative = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![
            C64::new(1.1, 0.0),
            C64::new(-0.1, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ]));
        assert!(JointState::new(negative, 2).is_err());
        assert!(OscillatorModel { n_fock: 1, ..Default::default() }.validate().is_err());
        assert!(OscillatorModel { kappa: -0.1, ..Default::default() }.validate().is_err());
    }

    #[test]
    fn thermal_oscillator_state() {
        let s = oscillator_thermal_state(40, 1.0, 0.5);
        let mean: f64 = (0..40).map(|k| k as f64 * s[(k, k)].re).sum();
        assert_abs_diff_eq!(mean, planck_occupation(1.0, 0.5).unwrap(), epsilon = 1e-12);
        assert_eq!(oscillator_thermal_state(3, 1.0, 0.0)[(0, 0)].re, 1.0);
    }
}
