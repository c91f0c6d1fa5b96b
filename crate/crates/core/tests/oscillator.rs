use std::f64::consts::PI;

use tlsdyn::{
    evolve_joint, evolve_rotating_br, lab_frame_observables, Basis, BathSpec, CouplingMode, OscillatorModel,
    QubitState, RotatingFieldParams, SolverConfig,
};

/// Lab `m_y` averaged over the last rotation period.
fn late_my(model: &OscillatorModel, mode: CouplingMode, t_end: f64) -> f64 {
    let p = RotatingFieldParams::new(1.0, 0.1).unwrap();
    let cfg = SolverConfig::window(0.0, t_end).with_samples(2001).with_tolerances(1e-8, 1e-10);
    let traj = evolve_joint(model, &p, mode, &cfg).unwrap();
    let lab = lab_frame_observables(&traj, &p).unwrap();
    let period = 2.0 * PI / p.omega;
    let late: Vec<f64> =
        lab.times.iter().zip(&lab.observables).filter(|(t, _)| **t >= t_end - period).map(|(_, o)| o.my).collect();
    late.iter().sum::<f64>() / late.len() as f64
}

#[test]
fn decoupled_mode_reproduces_unitary_qubit() {
    let p = RotatingFieldParams::new(1.0, 0.1).unwrap();
    let cfg = SolverConfig::window(0.0, 30.0).with_samples(61).with_tolerances(1e-11, 1e-13);
    let model = OscillatorModel { lambda: 0.0, n_fock: 4, ..Default::default() };
    let joint = evolve_joint(&model, &p, CouplingMode::PerpY, &cfg).unwrap();
    let bare =
        evolve_rotating_br(&p, CouplingMode::PerpY, &BathSpec::decoupled(), Basis::Adiabatic, &QubitState::ground(), &cfg)
            .unwrap();
    for (a, b) in joint.observables.iter().zip(&bare.observables) {
        assert!((a.mx - b.mx).abs() < 1e-8 && (a.my - b.my).abs() < 1e-8 && (a.mz - b.mz).abs() < 1e-8);
    }
    assert!(joint.diagnostics.max_trace_error < 1e-8);
}

#[test]
fn steady_response_is_universal() {
    let expected = -0.1 / 1.01f64.sqrt();
    for mode in [CouplingMode::PerpY, CouplingMode::InPlaneZ] {
        let my = late_my(&OscillatorModel::default(), mode, 400.0);
        assert!((my - expected).abs() < 2e-2, "{mode:?}: {my}");
    }
}

#[test]
fn truncation_leak_is_reported() {
    let p = RotatingFieldParams::new(1.0, 0.1).unwrap();
    let cfg = SolverConfig::window(0.0, 5.0).with_samples(11);
    let hot = OscillatorModel { temperature: 2.0, n_fock: 3, auto_grow: false, ..Default::default() };
    let err = evolve_joint(&hot, &p, CouplingMode::PerpY, &cfg).unwrap_err();
    assert!(matches!(err, tlsdyn::Error::Truncation { n_fock: 3, .. }), "{err}");
}
