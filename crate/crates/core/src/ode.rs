//! Explicit Runge–Kutta integrators: Dormand–Prince 5(4) with dense output and fixed-step RK4.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, SolverError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    #[default]
    AdaptiveRk,
    FixedRk4,
}

/// Integration window, tolerances and output grid.
///
/// `initial_step = 0` lets the adaptive method pick its first step; for
/// `FixedRk4` it is the step size and must be positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_step: f64,
    pub initial_step: f64,
    pub t_start: f64,
    pub t_end: f64,
    pub method: Method,
    /// Number of uniformly spaced output samples, endpoints included.
    pub samples: usize,
    pub max_steps: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            rel_tol: 1e-8,
            abs_tol: 1e-10,
            max_step: f64::INFINITY,
            initial_step: 0.0,
            t_start: 0.0,
            t_end: 100.0,
            method: Method::AdaptiveRk,
            samples: 1001,
            max_steps: 50_000_000,
        }
    }
}

impl SolverConfig {
    pub fn window(t_start: f64, t_end: f64) -> Self {
        SolverConfig { t_start, t_end, ..SolverConfig::default() }
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_tolerances(mut self, rel_tol: f64, abs_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return bad(format!("tolerances must be > 0 (rel {}, abs {})", self.rel_tol, self.abs_tol));
        }
        if !(self.t_start.is_finite() && self.t_end.is_finite() && self.t_end > self.t_start) {
            return bad(format!("need t_end > t_start, got [{}, {}]", self.t_start, self.t_end));
        }
        if !(self.max_step > 0.0) {
            return bad(format!("max_step must be > 0, got {}", self.max_step));
        }
        if !(self.initial_step >= 0.0 && self.initial_step.is_finite()) {
            return bad(format!("initial_step must be >= 0, got {}", self.initial_step));
        }
        if self.method == Method::FixedRk4 && self.initial_step == 0.0 {
            return bad("fixed-step RK4 needs initial_step > 0 as its step size".into());
        }
        if self.samples < 2 {
            return bad(format!("need at least 2 samples, got {}", self.samples));
        }
        Ok(())
    }

    /// Uniform output grid over the window.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.samples;
        let span = self.t_end - self.t_start;
        (0..n)
            .map(|k| if k + 1 == n { self.t_end } else { self.t_start + span * k as f64 / (n - 1) as f64 })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StepStats {
    pub accepted: usize,
    pub rejected: usize,
    pub rhs_evals: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
    pub stats: StepStats,
}

/// Integrates `y' = f(t, y)` over `cfg`'s window and returns the state at each of `times`.
///
/// `times` must be non-decreasing and inside the window. `observer` sees the
/// initial state and the state after every accepted step; an `Err` aborts.
pub fn integrate<F, O>(mut f: F, y0: &[f64], cfg: &SolverConfig, times: &[f64], mut observer: O) -> Result<Solution>
where
    F: FnMut(f64, &[f64], &mut [f64]),
    O: FnMut(f64, &[f64]) -> Result<(), String>,
{
    cfg.validate()?;
    if times.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Config("output times must be non-decreasing".into()));
    }
    if times.iter().any(|&t| t < cfg.t_start || t > cfg.t_end) {
        return Err(Error::Config("output times must lie inside the integration window".into()));
    }
    observer(cfg.t_start, y0).map_err(|reason| SolverError::Observer { t: cfg.t_start, reason })?;
    match cfg.method {
        Method::AdaptiveRk => dopri5(&mut f, y0, cfg, times, &mut observer),
        Method::FixedRk4 => rk4(&mut f, y0, cfg, times, &mut observer),
    }
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

fn rms_scaled(v: &[f64], y0: &[f64], y1: &[f64], cfg: &SolverConfig) -> f64 {
    let sum: f64 = v
        .iter()
        .zip(y0.iter().zip(y1))
        .map(|(e, (a, b))| {
            let sc = cfg.abs_tol + cfg.rel_tol * a.abs().max(b.abs());
            (e / sc).powi(2)
        })
        .sum();
    (sum / v.len().max(1) as f64).sqrt()
}

fn initial_step<F>(f: &mut F, t: f64, y: &[f64], f0: &[f64], cfg: &SolverConfig) -> f64
where
    F: FnMut(f64, &[f64], &mut [f64]),
{
    let d0 = rms_scaled(y, y, y, cfg);
    let d1 = rms_scaled(f0, y, y, cfg);
    let mut h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    h0 = h0.min(cfg.max_step).min(cfg.t_end - t);
    let y1: Vec<f64> = y.iter().zip(f0).map(|(a, b)| a + h0 * b).collect();
    let mut f1 = vec![0.0; y.len()];
    f(t + h0, &y1, &mut f1);
    let diff: Vec<f64> = f1.iter().zip(f0).map(|(a, b)| a - b).collect();
    let d2 = rms_scaled(&diff, y, y, cfg) / h0;
    let h1 = if d1.max(d2) <= 1e-15 { (h0 * 1e-3).max(1e-6) } else { (0.01 / d1.max(d2)).powf(0.2) };
    (100.0 * h0).min(h1).min(cfg.max_step)
}

fn dopri5<F, O>(f: &mut F, y0: &[f64], cfg: &SolverConfig, times: &[f64], observer: &mut O) -> Result<Solution>
where
    F: FnMut(f64, &[f64], &mut [f64]),
    O: FnMut(f64, &[f64]) -> Result<(), String>,
{
    let n = y0.len();
    let mut stats = StepStats::default();
    let mut t = cfg.t_start;
    let mut y = y0.to_vec();
    let mut k1 = vec![0.0; n];
    f(t, &y, &mut k1);
    stats.rhs_evals += 1;
    let mut h = if cfg.initial_step > 0.0 {
        cfg.initial_step.min(cfg.max_step)
    } else {
        stats.rhs_evals += 1;
        initial_step(f, t, &y, &k1, cfg)
    };
    let (mut k2, mut k3, mut k4, mut k5, mut k6, mut k7) =
        (vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n]);
    let mut tmp = vec![0.0; n];
    let mut y_new = vec![0.0; n];
    let mut err = vec![0.0; n];
    let mut out = Vec::with_capacity(times.len());
    let mut next = 0;
    while next < times.len() && times[next] <= t {
        out.push(y.clone());
        next += 1;
    }
    let mut last_rejected = false;

    while t < cfg.t_end {
        if stats.accepted + stats.rejected >= cfg.max_steps {
            return Err(SolverError::MaxSteps { t, max_steps: cfg.max_steps }.into());
        }
        let remaining = cfg.t_end - t;
        let last = h >= remaining;
        if last {
            h = remaining;
        }
        if h <= 1e-14 * t.abs().max(1.0) {
            return Err(SolverError::StepUnderflow { t }.into());
        }

        for i in 0..n {
            tmp[i] = y[i] + h * A21 * k1[i];
        }
        f(t + C2 * h, &tmp, &mut k2);
        for i in 0..n {
            tmp[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i]);
        }
        f(t + C3 * h, &tmp, &mut k3);
        for i in 0..n {
            tmp[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
        }
        f(t + C4 * h, &tmp, &mut k4);
        for i in 0..n {
            tmp[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
        }
        f(t + C5 * h, &tmp, &mut k5);
        for i in 0..n {
            tmp[i] = y[i] + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
        }
        let t_new = if last { cfg.t_end } else { t + h };
        f(t_new, &tmp, &mut k6);
        for i in 0..n {
            y_new[i] = y[i] + h * (A71 * k1[i] + A73 * k3[i] + A74 * k4[i] + A75 * k5[i] + A76 * k6[i]);
        }
        f(t_new, &y_new, &mut k7);
        stats.rhs_evals += 6;
        for i in 0..n {
            err[i] = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
        }
        let e = rms_scaled(&err, &y, &y_new, cfg);
        if !e.is_finite() {
            if y_new.iter().any(|v| !v.is_finite()) && h <= 1e-14 * t.abs().max(1.0) * 10.0 {
                return Err(SolverError::NonFinite { t }.into());
            }
            stats.rejected += 1;
            h *= 0.1;
            last_rejected = true;
            continue;
        }

        if e <= 1.0 {
            stats.accepted += 1;
            // Dense output on [t, t_new].
            while next < times.len() && times[next] <= t_new {
                let theta = ((times[next] - t) / h).clamp(0.0, 1.0);
                let th1 = 1.0 - theta;
                let mut ys = vec![0.0; n];
                for i in 0..n {
                    let ydiff = y_new[i] - y[i];
                    let bspl = h * k1[i] - ydiff;
                    let r4 = ydiff - h * k7[i] - bspl;
                    let r5 = h * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] + D7 * k7[i]);
                    ys[i] = y[i] + theta * (ydiff + th1 * (bspl + theta * (r4 + th1 * r5)));
                }
                out.push(ys);
                next += 1;
            }
            t = t_new;
            std::mem::swap(&mut y, &mut y_new);
            std::mem::swap(&mut k1, &mut k7);
            observer(t, &y).map_err(|reason| SolverError::Observer { t, reason })?;
            let mut factor = (0.9 * e.max(1e-10).powf(-0.2)).clamp(0.2, 5.0);
            if last_rejected {
                factor = factor.min(1.0);
            }
            h = (h * factor).min(cfg.max_step);
            last_rejected = false;
        } else {
            stats.rejected += 1;
            h *= (0.9 * e.powf(-0.2)).max(0.2);
            last_rejected = true;
        }
    }
    while out.len() < times.len() {
        out.push(y.clone());
    }
    Ok(Solution { times: times.to_vec(), states: out, stats })
}

fn rk4_step<F>(f: &mut F, t: f64, y: &[f64], h: f64, k1: &[f64], out: &mut [f64])
where
    F: FnMut(f64, &[f64], &mut [f64]),
{
    let n = y.len();
    let (mut k2, mut k3, mut k4, mut tmp) = (vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n]);
    for i in 0..n {
        tmp[i] = y[i] + 0.5 * h * k1[i];
    }
    f(t + 0.5 * h, &tmp, &mut k2);
    for i in 0..n {
        tmp[i] = y[i] + 0.5 * h * k2[i];
    }
    f(t + 0.5 * h, &tmp, &mut k3);
    for i in 0..n {
        tmp[i] = y[i] + h * k3[i];
    }
    f(t + h, &tmp, &mut k4);
    for i in 0..n {
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
}

/// Classic RK4 on a fixed step; output times inside a step get their own
/// partial step from the step start, so the main sequence is grid-independent.
fn rk4<F, O>(f: &mut F, y0: &[f64], cfg: &SolverConfig, times: &[f64], observer: &mut O) -> Result<Solution>
where
    F: FnMut(f64, &[f64], &mut [f64]),
    O: FnMut(f64, &[f64]) -> Result<(), String>,
{
    let n = y0.len();
    let span = cfg.t_end - cfg.t_start;
    let steps = (span / cfg.initial_step.min(cfg.max_step)).ceil().max(1.0) as usize;
    if steps > cfg.max_steps {
        return Err(SolverError::MaxSteps { t: cfg.t_start, max_steps: cfg.max_steps }.into());
    }
    let h = span / steps as f64;
    let mut stats = StepStats::default();
    let mut y = y0.to_vec();
    let mut k1 = vec![0.0; n];
    let mut y_new = vec![0.0; n];
    let mut out = Vec::with_capacity(times.len());
    let mut next = 0;
    while next < times.len() && times[next] <= cfg.t_start {
        out.push(y.clone());
        next += 1;
    }
    for s in 0..steps {
        let t = cfg.t_start + h * s as f64;
        let t_new = if s + 1 == steps { cfg.t_end } else { cfg.t_start + h * (s + 1) as f64 };
        f(t, &y, &mut k1);
        while next < times.len() && times[next] < t_new {
            let mut ys = vec![0.0; n];
            rk4_step(f, t, &y, times[next] - t, &k1, &mut ys);
            stats.rhs_evals += 3;
            out.push(ys);
            next += 1;
        }
        rk4_step(f, t, &y, t_new - t, &k1, &mut y_new);
        stats.rhs_evals += 4;
        stats.accepted += 1;
        if y_new.iter().any(|v| !v.is_finite()) {
            return Err(SolverError::NonFinite { t }.into());
        }
        std::mem::swap(&mut y, &mut y_new);
        observer(t_new, &y).map_err(|reason| SolverError::Observer { t: t_new, reason })?;
        while next < times.len() && times[next] <= t_new {
            out.push(y.clone());
            next += 1;
        }
    }
    Ok(Solution { times: times.to_vec(), states: out, stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oscillator(_t: f64, y: &[f64], dy: &mut [f64]) {
        dy[0] = y[1];
        dy[1] = -y[0];
    }

    fn no_observer(_: f64, _: &[f64]) -> Result<(), String> {
        Ok(())
    }

    #[test]
    fn dopri5_harmonic_oscillator() {
        let cfg = SolverConfig::window(0.0, 20.0).with_samples(41);
        let sol = integrate(oscillator, &[1.0, 0.0], &cfg, &cfg.grid(), no_observer).unwrap();
        for (t, y) in sol.times.iter().zip(&sol.states) {
            assert!((y[0] - t.cos()).abs() < 1e-7, "t = {t}");
            assert!((y[1] + t.sin()).abs() < 1e-7);
        }
    }

    #[test]
    fn dense_output_is_accurate_between_steps() {
        let cfg = SolverConfig { max_step: 0.1, ..SolverConfig::window(0.0, 5.0) };
        let times: Vec<f64> = (0..=500).map(|k| k as f64 * 0.01).collect();
        let sol = integrate(|t, _y, dy| dy[0] = t.cos(), &[0.0], &cfg, &times, no_observer).unwrap();
        let worst = times.iter().zip(&sol.states).map(|(t, y)| (y[0] - t.sin()).abs()).fold(0.0, f64::max);
        assert!(worst < 1e-8, "worst {worst}");
    }

    #[test]
    fn rk4_converges_at_fourth_order() {
        let run = |h: f64| {
            let cfg = SolverConfig { method: Method::FixedRk4, initial_step: h, ..SolverConfig::window(0.0, 2.0) };
            let sol = integrate(oscillator, &[1.0, 0.0], &cfg, &[0.7, 2.0], no_observer).unwrap();
            assert!((sol.states[0][0] - 0.7f64.cos()).abs() < 1e-6);
            (sol.states[1][0] - 2.0f64.cos()).abs()
        };
        let ratio = run(0.02) / run(0.01);
        assert!((ratio - 16.0).abs() < 1.0, "ratio {ratio}");
    }

    #[test]
    fn observer_sees_every_accepted_step() {
        let cfg = SolverConfig::window(0.0, 10.0);
        let mut seen = 0;
        let sol = integrate(oscillator, &[1.0, 0.0], &cfg, &[10.0], |_, _| {
            seen += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(seen, sol.stats.accepted + 1);
    }

    #[test]
    fn observer_can_abort() {
        let cfg = SolverConfig::window(0.0, 10.0);
        let r = integrate(oscillator, &[1.0, 0.0], &cfg, &[10.0], |t, _| if t > 5.0 { Err("stop".into()) } else { Ok(()) });
        assert!(matches!(r, Err(Error::Solver(SolverError::Observer { .. }))));
    }

    #[test]
    fn blow_up_reports_time() {
        let cfg = SolverConfig::window(0.0, 2.0);
        let r = integrate(|_t, y, dy| dy[0] = y[0] * y[0], &[1.0], &cfg, &[2.0], no_observer);
        match r {
            Err(Error::Solver(e)) => assert!(e.time() > 0.9 && e.time() <= 1.0 + 1e-6, "{e}"),
            other => panic!("expected solver error, got {other:?}"),
        }
    }

    #[test]
    fn config_validation() {
        assert!(SolverConfig::window(1.0, 1.0).validate().is_err());
        assert!(SolverConfig { rel_tol: 0.0, ..SolverConfig::default() }.validate().is_err());
        assert!(SolverConfig { method: Method::FixedRk4, ..SolverConfig::default() }.validate().is_err());
        let g = SolverConfig::window(-1.0, 1.0).with_samples(5).grid();
        assert_eq!(g, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
    }
}
