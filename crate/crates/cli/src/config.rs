//! Run and sweep configuration.
//!
//! Precedence, lowest first: built-in defaults, `--preset`, `--config`,
//! command-line flags. Parameters that the scenario does not use are
//! rejected, and defaults are filled in for the ones it does, so the echoed
//! configuration is complete.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};
use tlsdyn::{Basis, CouplingMode, Method};

use crate::presets;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioKind {
    Rotate,
    Lz,
    Oscillator,
    LindbladRotate,
    LindbladLz,
}

impl ScenarioKind {
    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::Rotate => "rotate",
            ScenarioKind::Lz => "lz",
            ScenarioKind::Oscillator => "oscillator",
            ScenarioKind::LindbladRotate => "lindblad-rotate",
            ScenarioKind::LindbladLz => "lindblad-lz",
        }
    }

    fn is_lz(self) -> bool {
        matches!(self, ScenarioKind::Lz | ScenarioKind::LindbladLz)
    }
}

/// Lab state before the rotation starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Initial {
    Ground,
    Thermal,
}

/// Equation used for Landau–Zener runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Equation {
    BlochRedfield,
    RateEquation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
}

/// Physical parameters. `Δ = 1`; `ec = inf` removes the cutoff.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub temp: Option<f64>,
    #[serde(default, with = "cutoff_value", skip_serializing_if = "Option::is_none")]
    pub ec: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_fock: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coupling: Option<CouplingMode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Basis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub initial: Option<Initial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equation: Option<Equation>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct SolverSettings {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_start: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_final: Option<f64>,
    /// `t_final = k E_c/v` for Landau–Zener runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_final_ec: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_step: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub initial_step: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct OutputSettings {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Reduction {
    FinalPe,
    FinalMy,
    FullTrajectory,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct SweepSpec {
    pub param: String,
    pub values: Vec<f64>,
    pub reduction: Reduction,
}

/// One scenario run, as read from a file or assembled from flags.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunConfig {
    pub scenario: ScenarioKind,
    #[serde(default)]
    pub params: Params,
    #[serde(default)]
    pub solver: SolverSettings,
    #[serde(default)]
    pub output: OutputSettings,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSpec>,
}

impl RunConfig {
    pub fn new(scenario: ScenarioKind) -> Self {
        RunConfig {
            scenario,
            params: Params::default(),
            solver: SolverSettings::default(),
            output: OutputSettings::default(),
            sweep: None,
        }
    }

    /// Reads TOML, or JSON when the extension is `.json`. A JSON output file
    /// is accepted too: its `config` member is used.
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        if path.extension().is_some_and(|e| e == "json") {
            let value: serde_json::Value =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            let value = value.get("config").cloned().unwrap_or(value);
            serde_json::from_value(value).with_context(|| format!("invalid config in {}", path.display()))
        } else {
            Self::from_toml(&text).with_context(|| format!("invalid config in {}", path.display()))
        }
    }

    pub fn from_toml(text: &str) -> anyhow::Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn preset(name: &str) -> anyhow::Result<Self> {
        let text = presets::get(name)?;
        Self::from_toml(text).with_context(|| format!("preset {name}"))
    }

    /// Overlays every field set in `other`.
    pub fn overlay(&mut self, other: &RunConfig) {
        macro_rules! take {
            ($dst:expr, $src:expr, $($f:ident),*) => { $( if $src.$f.is_some() { $dst.$f = $src.$f.clone(); } )* };
        }
        take!(self.params, other.params, omega, v, alpha, temp, ec, j0, gamma, lambda, kappa, omega0, n_fock, coupling, basis, initial, equation);
        take!(self.solver, other.solver, t_start, t_final, t_final_ec, samples, rel_tol, abs_tol, method, max_step, initial_step);
        take!(self.output, other.output, path, format);
        if other.sweep.is_some() {
            self.sweep = other.sweep.clone();
        }
    }

    /// Checks scenario-specific keys and fills in defaults.
    pub fn resolve(mut self) -> anyhow::Result<Self> {
        use ScenarioKind::*;
        let s = self.scenario;
        let p = &mut self.params;
        let uses = |name: &str| -> bool {
            match name {
                "omega" => matches!(s, Rotate | Oscillator | LindbladRotate),
                "v" => s.is_lz(),
                "alpha" | "ec" | "j0" => matches!(s, Rotate | Lz),
                "temp" => matches!(s, Rotate | Lz | Oscillator),
                "gamma" => matches!(s, LindbladRotate | LindbladLz),
                "lambda" | "kappa" | "omega0" | "n-fock" => s == Oscillator,
                "coupling" => matches!(s, Rotate | Lz | Oscillator),
                "basis" => true,
                "initial" => s == Rotate,
                "equation" => s == Lz,
                _ => false,
            }
        };
        let set: [(&str, bool); 15] = [
            ("omega", p.omega.is_some()),
            ("v", p.v.is_some()),
            ("alpha", p.alpha.is_some()),
            ("temp", p.temp.is_some()),
            ("ec", p.ec.is_some()),
            ("j0", p.j0.is_some()),
            ("gamma", p.gamma.is_some()),
            ("lambda", p.lambda.is_some()),
            ("kappa", p.kappa.is_some()),
            ("omega0", p.omega0.is_some()),
            ("n-fock", p.n_fock.is_some()),
            ("coupling", p.coupling.is_some()),
            ("basis", p.basis.is_some()),
            ("initial", p.initial.is_some()),
            ("equation", p.equation.is_some()),
        ];
        for (name, present) in set {
            if present && !uses(name) {
                bail!("params.{name}: not used by scenario '{}'", s.name());
            }
        }
        fn fill<T>(slot: &mut Option<T>, used: bool, value: T) {
            if used && slot.is_none() {
                *slot = Some(value);
            }
        }
        fill(&mut p.omega, uses("omega"), 0.1);
        fill(&mut p.v, uses("v"), 0.5);
        fill(&mut p.alpha, uses("alpha"), 0.05);
        fill(&mut p.temp, uses("temp"), 0.0);
        fill(&mut p.ec, uses("ec"), 10.0);
        fill(&mut p.j0, uses("j0"), 0.0);
        fill(&mut p.gamma, uses("gamma"), 0.1);
        fill(&mut p.lambda, uses("lambda"), 0.1);
        fill(&mut p.kappa, uses("kappa"), 0.2);
        fill(&mut p.omega0, uses("omega0"), 1.0);
        fill(&mut p.n_fock, uses("n-fock"), 10);
        let coupling = if s == Lz { CouplingMode::InPlaneZ } else { CouplingMode::PerpY };
        fill(&mut p.coupling, uses("coupling"), coupling);
        let basis = if s.is_lz() { Basis::Eigen } else { Basis::Diabatic };
        fill(&mut p.basis, true, basis);
        fill(&mut p.initial, uses("initial"), Initial::Ground);
        fill(&mut p.equation, uses("equation"), Equation::BlochRedfield);
        if s == Lz && p.coupling == Some(CouplingMode::PerpY) {
            bail!("params.coupling: perp-y is not defined for lz (use inplane-z or longitudinal)");
        }

        let sv = &mut self.solver;
        if sv.t_final.is_some() && sv.t_final_ec.is_some() {
            bail!("solver: set only one of t-final and t-final-ec");
        }
        if sv.t_final_ec.is_some() && s != Lz {
            bail!("solver.t-final-ec: only meaningful for lz");
        }
        fill(&mut sv.samples, true, 1001);
        fill(&mut sv.rel_tol, true, 1e-8);
        fill(&mut sv.abs_tol, true, 1e-10);
        fill(&mut sv.method, true, Method::AdaptiveRk);
        fill(&mut self.output.format, true, Format::Csv);
        if let Some(sweep) = &self.sweep {
            let name = sweep.param.as_str();
            let numeric = ["omega", "v", "alpha", "temp", "ec", "j0", "gamma", "lambda", "kappa", "omega0", "t-final"];
            if !numeric.contains(&name) || (name != "t-final" && !uses(name)) {
                bail!("sweep.param: '{name}' is not a numeric parameter of scenario '{}'", s.name());
            }
            if let Some(bad) = sweep.values.iter().find(|v| !v.is_finite()) {
                bail!("sweep.values: {bad} is not finite");
            }
        }
        Ok(self)
    }

    /// Sets one swept parameter.
    pub fn with_param(&self, name: &str, value: f64) -> RunConfig {
        let mut c = self.clone();
        let p = &mut c.params;
        match name {
            "omega" => p.omega = Some(value),
            "v" => p.v = Some(value),
            "alpha" => p.alpha = Some(value),
            "temp" => p.temp = Some(value),
            "ec" => p.ec = Some(value),
            "j0" => p.j0 = Some(value),
            "gamma" => p.gamma = Some(value),
            "lambda" => p.lambda = Some(value),
            "kappa" => p.kappa = Some(value),
            "omega0" => p.omega0 = Some(value),
            "t-final" => c.solver.t_final = Some(value),
            _ => unreachable!("checked in resolve"),
        }
        c.sweep = None;
        c
    }
}

/// `ec` as a number or the string `"inf"`, since JSON has no infinity.
mod cutoff_value {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) if x.is_infinite() => s.serialize_str("inf"),
            Some(x) => s.serialize_f64(*x),
            None => s.serialize_none(),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Num(f64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        match Option::<Raw>::deserialize(d)? {
            None => Ok(None),
            Some(Raw::Num(x)) => Ok(Some(x)),
            Some(Raw::Text(t)) => t
                .parse::<f64>()
                .map(Some)
                .map_err(|_| serde::de::Error::custom(format!("ec: expected a number or \"inf\", got '{t}'"))),
        }
    }
}

/// Parses `a,b,c`, `a..b` (11 points) or `a..b:n` (n points, endpoints included).
pub fn parse_values(text: &str) -> anyhow::Result<Vec<f64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    if let Some((lo, rest)) = text.split_once("..") {
        let (hi, n) = match rest.split_once(':') {
            Some((hi, n)) => (hi, n.trim().parse::<usize>().with_context(|| format!("point count '{n}'"))?),
            None => (rest, 11),
        };
        let lo: f64 = lo.trim().parse().with_context(|| format!("range start '{lo}'"))?;
        let hi: f64 = hi.trim().parse().with_context(|| format!("range end '{hi}'"))?;
        if n < 2 {
            bail!("a range needs at least 2 points");
        }
        return Ok((0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect());
    }
    text.split(',').map(|s| s.trim().parse::<f64>().with_context(|| format!("value '{s}'"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_lists() {
        assert_eq!(parse_values("0..3:4").unwrap(), vec![0.0, 1.0, 2.0, 3.0]);
        assert_eq!(parse_values("0.0..3.0").unwrap().len(), 11);
        assert_eq!(parse_values("1, 2.5").unwrap(), vec![1.0, 2.5]);
        assert!(parse_values("").unwrap().is_empty());
        assert!(parse_values("1,x").is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = RunConfig::from_toml("scenario = \"rotate\"\n[params]\nomgea = 0.1\n").unwrap_err();
        assert!(format!("{err:#}").contains("omgea"));
    }

    #[test]
    fn scenario_keys_are_checked() {
        let mut c = RunConfig::new(ScenarioKind::Rotate);
        c.params.v = Some(0.5);
        assert!(c.resolve().unwrap_err().to_string().contains("params.v"));
        let c = RunConfig::new(ScenarioKind::Lz).resolve().unwrap();
        assert_eq!(c.params.coupling, Some(CouplingMode::InPlaneZ));
        assert_eq!(c.params.basis, Some(Basis::Eigen));
        assert!(c.params.omega.is_none());
    }

    #[test]
    fn overlay_prefers_later_values() {
        let mut base = RunConfig::new(ScenarioKind::Rotate);
        base.params.alpha = Some(0.02);
        base.params.temp = Some(1.0);
        let mut flags = RunConfig::new(ScenarioKind::Rotate);
        flags.params.alpha = Some(0.1);
        base.overlay(&flags);
        assert_eq!(base.params.alpha, Some(0.1));
        assert_eq!(base.params.temp, Some(1.0));
    }

    #[test]
    fn every_preset_resolves() {
        for name in presets::NAMES {
            RunConfig::preset(name).unwrap().resolve().unwrap_or_else(|e| panic!("{name}: {e:#}"));
        }
    }
}
