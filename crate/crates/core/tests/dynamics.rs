use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use tlsdyn::analytics::{closed_form_my, lz_ideal_probability, steady_state_my};
use tlsdyn::state::thermal_polarization;
use tlsdyn::{
    evolve_br_lz, evolve_br_secular, evolve_lindblad_dephasing, evolve_rotating_br, lab_frame_observables,
    static_rates, Basis, BathSpec, CouplingMode, CouplingSpec, Cutoff, LindbladScenario, LzCoupling, LzParams, Method,
    QubitState, RateSet, RotatingFieldParams, SolverConfig,
};

#[test]
fn free_precession() {
    let cfg = SolverConfig::window(0.0, 10.0).with_samples(101);
    let start = QubitState::from_bloch([1.0, 0.0, 0.0]).unwrap();
    let traj = evolve_br_secular(&start, |_| 1.0, |_| Ok(RateSet::default()), &cfg, None).unwrap();
    for (t, o) in traj.times.iter().zip(&traj.observables) {
        assert_abs_diff_eq!(o.mx, t.cos(), epsilon = 1e-7);
        assert_abs_diff_eq!(o.my, -t.sin(), epsilon = 1e-7);
    }
}

#[test]
fn relaxes_to_thermal_polarization() {
    for temp in [0.0, 0.5, 2.0] {
        let bath = BathSpec::new(0.05, Cutoff::Finite(10.0), temp).unwrap();
        let rates = static_rates(&CouplingSpec::new(CouplingMode::PerpY), 1.0, &bath).unwrap();
        let cfg = SolverConfig::window(0.0, 30.0 / rates.total_flip()).with_samples(11);
        let start = QubitState::from_bloch([0.0, 0.0, -1.0]).unwrap();
        let traj = evolve_br_secular(&start, |_| 1.0, |_| Ok(rates), &cfg, Some(temp)).unwrap();
        assert_abs_diff_eq!(traj.last().mz, thermal_polarization(1.0, temp), epsilon = 1e-7);
        assert!(traj.diagnostics.max_detailed_balance_error < 1e-12);
    }
}

#[test]
fn rotating_eigen_run_matches_closed_form() {
    let p = RotatingFieldParams::new(1.0, 0.1).unwrap();
    let bath = BathSpec::new(0.05, Cutoff::Finite(10.0), 0.5).unwrap();
    let m0 = thermal_polarization(p.w_gap(), bath.temperature);
    let start = QubitState::from_bloch([0.0, 0.0, m0]).unwrap();
    let cfg = SolverConfig::window(0.0, 100.0).with_samples(501).with_tolerances(1e-10, 1e-12);
    let traj = evolve_rotating_br(&p, CouplingMode::PerpY, &bath, Basis::Eigen, &start, &cfg).unwrap();
    let lab = lab_frame_observables(&traj, &p).unwrap();
    for (t, o) in lab.times.iter().zip(&lab.observables) {
        assert_abs_diff_eq!(o.my, closed_form_my(*t, &p, &bath).unwrap(), epsilon = 1e-6);
    }
    assert_abs_diff_eq!(lab.last().my, steady_state_my(&p, 0.5), epsilon = 1e-3);
}

#[test]
fn adiabatic_and_eigen_runs_agree_without_bath() {
    let p = RotatingFieldParams::new(1.0, 0.2).unwrap();
    let bath = BathSpec::decoupled();
    let cfg = SolverConfig::window(0.0, 20.0).with_samples(41).with_tolerances(1e-11, 1e-13);
    let start = QubitState::ground();
    let a = evolve_rotating_br(&p, CouplingMode::PerpY, &bath, Basis::Adiabatic, &start, &cfg).unwrap();
    let e = evolve_rotating_br(&p, CouplingMode::PerpY, &bath, Basis::Eigen, &start, &cfg).unwrap();
    let (a, e) = (lab_frame_observables(&a, &p).unwrap(), lab_frame_observables(&e, &p).unwrap());
    for (x, y) in a.observables.iter().zip(&e.observables) {
        assert_abs_diff_eq!(x.mx, y.mx, epsilon = 1e-8);
        assert_abs_diff_eq!(x.my, y.my, epsilon = 1e-8);
        assert_abs_diff_eq!(x.mz, y.mz, epsilon = 1e-8);
    }
    let pops = e.populations.unwrap();
    assert!(pops.iter().all(|b| (0.0..=1.0).contains(&b.eigen)));
}

#[test]
fn diabatic_basis_is_rejected() {
    let p = RotatingFieldParams::new(1.0, 0.1).unwrap();
    let cfg = SolverConfig::window(0.0, 1.0);
    let r = evolve_rotating_br(&p, CouplingMode::PerpY, &BathSpec::decoupled(), Basis::Diabatic, &QubitState::ground(), &cfg);
    assert!(matches!(r, Err(tlsdyn::Error::Config(_))));
}

#[test]
fn unitary_landau_zener() {
    for v in [0.5, 1.0] {
        let p = LzParams::new(1.0, v).unwrap();
        let cfg = SolverConfig::window(-200.0, 200.0).with_samples(201);
        let traj = evolve_br_lz(&p, LzCoupling::Transverse, &BathSpec::decoupled(), Basis::Eigen, &cfg).unwrap();
        let expected = lz_ideal_probability(v, 1.0).unwrap();
        assert!((traj.final_pe() / expected - 1.0).abs() < 0.01, "v = {v}: {}", traj.final_pe());
        assert!(traj.diagnostics.max_trace_error < 1e-9);
        assert!(traj.diagnostics.max_hermiticity_error < 1e-12);
    }
}

#[test]
fn lz_rejects_late_start() {
    let p = LzParams::new(1.0, 0.5).unwrap();
    let cfg = SolverConfig::window(-1.0, 10.0);
    assert!(evolve_br_lz(&p, LzCoupling::Transverse, &BathSpec::decoupled(), Basis::Eigen, &cfg).is_err());
}

#[test]
fn lindblad_dephasing_loses_purity_monotonically() {
    let p = LzParams::new(1.0, 0.5).unwrap();
    let cfg = SolverConfig::window(-60.0, 60.0).with_samples(121);
    let traj = evolve_lindblad_dephasing(&LindbladScenario::LandauZener(p), 1.0, &cfg).unwrap();
    let purities: Vec<f64> = traj.states.iter().map(QubitState::purity).collect();
    assert!(purities.windows(2).all(|w| w[1] <= w[0] + 1e-9));
    assert!(traj.final_pe() > 0.0 && traj.final_pe() < 0.5);
}

#[test]
fn fixed_step_runs_are_reproducible() {
    let p = LzParams::new(1.0, 0.5).unwrap();
    let bath = BathSpec::new(0.05, Cutoff::Finite(5.0), 0.5).unwrap();
    let mut cfg = SolverConfig::window(-20.0, 20.0).with_samples(81);
    cfg.method = Method::FixedRk4;
    cfg.initial_step = 0.01;
    let a = evolve_br_lz(&p, LzCoupling::Transverse, &bath, Basis::Eigen, &cfg).unwrap();
    let b = evolve_br_lz(&p, LzCoupling::Transverse, &bath, Basis::Eigen, &cfg).unwrap();
    assert_eq!(a.observables, b.observables);
    cfg.method = Method::AdaptiveRk;
    cfg.initial_step = 0.0;
    let c = evolve_br_lz(&p, LzCoupling::Transverse, &bath, Basis::Eigen, &cfg).unwrap();
    assert_abs_diff_eq!(a.final_pe(), c.final_pe(), epsilon = 1e-7);
}

#[test]
fn tightening_tolerance_converges() {
    let p = LzParams::new(1.0, 0.5).unwrap();
    let bath = BathSpec::new(0.05, Cutoff::Finite(5.0), 0.0).unwrap();
    let run = |rel: f64| {
        let cfg = SolverConfig::window(-40.0, 40.0).with_samples(2).with_tolerances(rel, rel * 1e-2);
        evolve_br_lz(&p, LzCoupling::Transverse, &bath, Basis::Eigen, &cfg).unwrap().final_pe()
    };
    let (coarse, fine, finer) = (run(1e-6), run(1e-8), run(1e-10));
    assert!((fine - finer).abs() <= (coarse - finer).abs() + 1e-12);
    assert!((fine - finer).abs() < 1e-7);
    assert!(finer > 0.0 && finer < (-PI).exp());
}

#[test]
fn change_basis_round_trips_populations() {
    let p = LzParams::new(1.0, 0.5).unwrap();
    let bath = BathSpec::new(0.05, Cutoff::Finite(5.0), 0.5).unwrap();
    let cfg = SolverConfig::window(-40.0, 40.0).with_samples(81);
    let traj = evolve_br_lz(&p, LzCoupling::Transverse, &bath, Basis::Eigen, &cfg).unwrap();
    let again = tlsdyn::change_basis(&traj, &p, Basis::Eigen).unwrap();
    for (a, b) in traj.observables.iter().zip(&again.observables) {
        assert_abs_diff_eq!(a.pe, b.pe, epsilon = 1e-12);
        assert_abs_diff_eq!(a.mx, b.mx, epsilon = 1e-12);
    }
    let adiabatic = tlsdyn::change_basis(&traj, &p, Basis::Adiabatic).unwrap();
    let pops = adiabatic.populations.as_ref().unwrap();
    for (o, pop) in adiabatic.observables.iter().zip(pops) {
        assert_abs_diff_eq!(o.pe, pop.adiabatic, epsilon = 1e-12);
    }
}
