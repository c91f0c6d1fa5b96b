//! `tlsdyn`: run, sweep and check dissipative qubit simulations.
//!
//! Exit codes: 0 success, 1 configuration error, 2 solver error.

mod config;
mod output;
mod presets;
mod run;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::bail;
use clap::{Args, Parser, Subcommand};
use tlsdyn::{checks, Basis, CouplingMode, Method};

use config::{Equation, Format, Initial, Reduction, RunConfig, ScenarioKind, SweepSpec};
use output::{Cell, Table};
use run::Failure;

#[derive(Parser, Debug)]
#[command(name = "tlsdyn", version, about = "Dissipative qubit dynamics under slowly varying control fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Field rotating at constant rate, Bloch-Redfield bath.
    #[command(allow_negative_numbers = true)]
    Rotate(RunArgs),
    /// Landau-Zener sweep, Bloch-Redfield bath or rate equation.
    #[command(allow_negative_numbers = true)]
    Lz(RunArgs),
    /// Rotating field, qubit coupled to a damped oscillator.
    #[command(allow_negative_numbers = true)]
    Oscillator(RunArgs),
    /// Rotating field, Lindblad pure dephasing.
    #[command(allow_negative_numbers = true)]
    LindbladRotate(RunArgs),
    /// Landau-Zener sweep, Lindblad pure dephasing.
    #[command(allow_negative_numbers = true)]
    LindbladLz(RunArgs),
    /// Repeat a scenario over a list of parameter values.
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Compare numerics with closed forms.
    OracleCheck(OracleArgs),
}

/// Flags shared by every run. Unset flags fall back to the config file, then the preset, then defaults.
#[derive(Args, Debug, Default, Clone)]
struct RunArgs {
    /// TOML config file, or a JSON output file whose config echo is reused.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Built-in figure preset (fig1 ... fig14).
    #[arg(long)]
    preset: Option<String>,

    /// Rotation rate.
    #[arg(long)]
    omega: Option<f64>,
    /// Level-crossing speed.
    #[arg(long)]
    v: Option<f64>,
    /// Ohmic coupling strength.
    #[arg(long)]
    alpha: Option<f64>,
    /// Bath temperature.
    #[arg(long)]
    temp: Option<f64>,
    /// Bath cutoff; `inf` for none.
    #[arg(long)]
    ec: Option<f64>,
    /// Low-frequency spectral weight (pure dephasing).
    #[arg(long)]
    j0: Option<f64>,
    /// Lindblad dephasing rate.
    #[arg(long)]
    gamma: Option<f64>,
    /// Qubit-oscillator coupling.
    #[arg(long)]
    lambda: Option<f64>,
    /// Oscillator damping.
    #[arg(long)]
    kappa: Option<f64>,
    /// Oscillator frequency.
    #[arg(long)]
    omega0: Option<f64>,
    /// Oscillator Fock-space size.
    #[arg(long)]
    n_fock: Option<usize>,
    /// Bath coupling direction: perp-y, inplane-z or longitudinal.
    #[arg(long)]
    coupling: Option<CouplingMode>,
    /// Output basis: diabatic, adiabatic or eigen.
    #[arg(long)]
    basis: Option<Basis>,
    /// Lab state before the rotation starts.
    #[arg(long, value_enum)]
    initial: Option<Initial>,
    /// Landau-Zener equation.
    #[arg(long, value_enum)]
    equation: Option<Equation>,

    #[arg(long)]
    t_start: Option<f64>,
    #[arg(long)]
    t_final: Option<f64>,
    /// End the Landau-Zener window at this multiple of E_c/v.
    #[arg(long)]
    t_final_ec: Option<f64>,
    /// Output samples, endpoints included.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long)]
    abs_tol: Option<f64>,
    /// adaptive-rk or fixed-rk4.
    #[arg(long, value_parser = parse_method)]
    method: Option<Method>,
    #[arg(long)]
    max_step: Option<f64>,
    /// First step (adaptive) or step size (fixed-rk4).
    #[arg(long)]
    initial_step: Option<f64>,

    /// Output file; defaults to $TLSDYN_OUTPUT_DIR/<scenario>.<ext>, else stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Scenario to sweep; taken from --config or --preset when omitted.
    #[arg(value_enum)]
    scenario: Option<ScenarioKind>,
    /// Parameter to vary (omega, v, alpha, temp, ec, j0, gamma, lambda, kappa, omega0, t-final).
    #[arg(long)]
    param: Option<String>,
    /// `a,b,c`, `a..b` (11 points) or `a..b:n`. An empty string gives an empty table.
    #[arg(long, allow_hyphen_values = true)]
    values: Option<String>,
    #[arg(long, value_enum)]
    reduction: Option<Reduction>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// Check id.
    id: Option<String>,
    /// Run every check.
    #[arg(long, conflicts_with = "id")]
    all: bool,
    /// List check ids.
    #[arg(long, conflicts_with_all = ["id", "all"])]
    list: bool,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

fn parse_method(s: &str) -> Result<Method, String> {
    match s {
        "adaptive-rk" | "adaptive" | "dopri5" => Ok(Method::AdaptiveRk),
        "fixed-rk4" | "rk4" => Ok(Method::FixedRk4),
        other => Err(format!("unknown method '{other}' (expected adaptive-rk or fixed-rk4)")),
    }
}

impl RunArgs {
    fn flags(&self, scenario: ScenarioKind) -> RunConfig {
        let mut c = RunConfig::new(scenario);
        let p = &mut c.params;
        p.omega = self.omega;
        p.v = self.v;
        p.alpha = self.alpha;
        p.temp = self.temp;
        p.ec = self.ec;
        p.j0 = self.j0;
        p.gamma = self.gamma;
        p.lambda = self.lambda;
        p.kappa = self.kappa;
        p.omega0 = self.omega0;
        p.n_fock = self.n_fock;
        p.coupling = self.coupling;
        p.basis = self.basis;
        p.initial = self.initial;
        p.equation = self.equation;
        let s = &mut c.solver;
        s.t_start = self.t_start;
        s.t_final = self.t_final;
        s.t_final_ec = self.t_final_ec;
        s.samples = self.samples;
        s.rel_tol = self.rel_tol;
        s.abs_tol = self.abs_tol;
        s.method = self.method;
        s.max_step = self.max_step;
        s.initial_step = self.initial_step;
        c.output.path = self.output.clone();
        c.output.format = self.format;
        c
    }

    /// Preset and config file, in precedence order.
    fn sources(&self) -> anyhow::Result<Vec<RunConfig>> {
        let mut out = Vec::new();
        if let Some(name) = &self.preset {
            out.push(RunConfig::preset(name)?);
        }
        if let Some(path) = &self.config {
            out.push(RunConfig::load(path)?);
        }
        Ok(out)
    }

    /// Merges defaults, preset, config file and flags for `scenario`.
    fn merged(&self, scenario: Option<ScenarioKind>) -> anyhow::Result<RunConfig> {
        let sources = self.sources()?;
        let scenario = match (scenario, sources.last()) {
            (Some(s), _) => s,
            (None, Some(c)) => c.scenario,
            (None, None) => bail!("no scenario given: pass one, or use --config or --preset"),
        };
        let mut cfg = RunConfig::new(scenario);
        for src in &sources {
            if src.scenario != scenario {
                bail!("config is for scenario '{}', not '{}'", src.scenario.name(), scenario.name());
            }
            cfg.overlay(src);
        }
        cfg.overlay(&self.flags(scenario));
        // An output path ending in .json implies JSON unless a format was chosen.
        if self.format.is_none() && cfg.output.format.is_none() {
            if let Some(p) = &cfg.output.path {
                if p.extension().is_some_and(|e| e == "json") {
                    cfg.output.format = Some(Format::Json);
                }
            }
        }
        Ok(cfg)
    }
}

fn config_error(e: anyhow::Error) -> Failure {
    Failure::Config(format!("{e:#}"))
}

fn print_warnings(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

fn run_scenario(scenario: ScenarioKind, args: &RunArgs) -> Result<(), Failure> {
    let cfg = args.merged(Some(scenario)).map_err(config_error)?;
    if cfg.sweep.is_some() {
        return Err(Failure::Config(format!(
            "this config defines a sweep; run it with `tlsdyn sweep {}`",
            scenario.name()
        )));
    }
    let cfg = cfg.resolve().map_err(config_error)?;
    let out = run::run(&cfg)?;
    print_warnings(&out.warnings);
    let table = Table {
        columns: output::RECORD_COLUMNS.iter().map(|c| c.to_string()).collect(),
        rows: out.records.iter().map(|r| output::record_cells(r).to_vec()).collect(),
        warnings: out.warnings,
    };
    let format = cfg.output.format.unwrap_or(Format::Csv);
    let dest = output::destination(cfg.output.path.as_deref(), scenario.name(), format);
    output::emit(&table, Some(&cfg), format, dest.as_deref()).map_err(config_error)
}

fn run_sweep(args: &SweepArgs) -> Result<(), Failure> {
    let mut cfg = args.run.merged(args.scenario).map_err(config_error)?;
    let from_file = cfg.sweep.clone();
    let param = args.param.clone().or_else(|| from_file.as_ref().map(|s| s.param.clone()));
    let values = match &args.values {
        Some(text) => Some(config::parse_values(text).map_err(config_error)?),
        None => from_file.as_ref().map(|s| s.values.clone()),
    };
    let reduction = args.reduction.or(from_file.as_ref().map(|s| s.reduction)).unwrap_or(Reduction::FinalPe);
    let (Some(param), Some(values)) = (param, values) else {
        return Err(Failure::Config("sweep needs --param and --values (or a [sweep] table)".into()));
    };
    if args.jobs == Some(0) {
        return Err(Failure::Config("--jobs must be at least 1".into()));
    }
    cfg.sweep = Some(SweepSpec { param, values, reduction });
    let cfg = cfg.resolve().map_err(config_error)?;
    let spec = cfg.sweep.clone().expect("set above");
    let table = sweep::sweep(&cfg, &spec, args.jobs).map_err(config_error)?;
    print_warnings(&table.warnings);
    let format = cfg.output.format.unwrap_or(Format::Csv);
    let stem = format!("sweep-{}-{}", cfg.scenario.name(), spec.param);
    let dest = output::destination(cfg.output.path.as_deref(), &stem, format);
    output::emit(&table, Some(&cfg), format, dest.as_deref()).map_err(config_error)
}

fn oracle_check(args: &OracleArgs) -> Result<(), Failure> {
    if args.list {
        for c in checks::CATALOG {
            println!("{:<24} C{:<3} {}", c.id, c.criterion, c.title);
        }
        return Ok(());
    }
    let selected: Vec<&checks::Check> = match (&args.id, args.all) {
        (_, true) => checks::CATALOG.iter().collect(),
        (Some(id), false) => vec![checks::find(id)?],
        (None, false) => return Err(Failure::Config(format!("name a check or pass --all; available: {}", checks::ids().join(", ")))),
    };
    use rayon::prelude::*;
    let reports: Vec<checks::CheckReport> = selected.par_iter().map(|c| c.run()).collect();
    let columns = ["id", "criterion", "label", "observed", "expected", "tolerance", "comparison", "deviation", "verdict"];
    let mut table = Table { columns: columns.iter().map(|c| c.to_string()).collect(), ..Table::default() };
    for r in &reports {
        if let Some(e) = &r.error {
            table.rows.push(vec![
                Cell::Text(r.id.into()),
                Cell::Text(r.criterion.to_string()),
                Cell::Text(e.clone()),
                Cell::Text(String::new()),
                Cell::Text(String::new()),
                Cell::Text(String::new()),
                Cell::Text(String::new()),
                Cell::Text(String::new()),
                Cell::Text("error".into()),
            ]);
        }
        for m in &r.measurements {
            let comparison = serde_json::to_value(m.comparison).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            table.rows.push(vec![
                Cell::Text(r.id.into()),
                Cell::Text(r.criterion.to_string()),
                Cell::Text(m.label.clone()),
                Cell::Num(m.observed),
                Cell::Num(m.expected),
                Cell::Num(m.tolerance),
                Cell::Text(comparison),
                Cell::Num(m.deviation()),
                Cell::Text(if m.passed { "pass" } else { "fail" }.into()),
            ]);
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    eprintln!("{} of {} checks passed", reports.len() - failed, reports.len());
    let dest = output::destination(args.output.as_deref(), "oracle-check", args.format);
    output::emit(&table, None, args.format, dest.as_deref()).map_err(config_error)
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Rotate(a) => run_scenario(ScenarioKind::Rotate, a),
        Command::Lz(a) => run_scenario(ScenarioKind::Lz, a),
        Command::Oscillator(a) => run_scenario(ScenarioKind::Oscillator, a),
        Command::LindbladRotate(a) => run_scenario(ScenarioKind::LindbladRotate, a),
        Command::LindbladLz(a) => run_scenario(ScenarioKind::LindbladLz, a),
        Command::Sweep(a) => run_sweep(a),
        Command::OracleCheck(a) => oracle_check(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code() as u8)
        }
    }
}

