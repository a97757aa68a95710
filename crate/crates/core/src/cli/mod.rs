//! Command-line front end: every computation as a subcommand with CSV or
//! JSON output on stdout (or a file), diagnostics on stderr.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 domain failure
//! (no resonance, no well, no periodic orbit, divergent integral).

mod config;

pub use config::{OutputFormat, RunConfig};

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::potential::EffectivePotential;
use crate::resonance::{self, ResonanceReport};
use crate::trajectory;
use crate::units::DimensionlessProblem;

#[derive(Parser, Debug)]
#[command(
    name = "magtunnel",
    about = "Tunneling exponents for long barriers in a magnetic field",
    version
)]
struct Cli {
    #[command(flatten)]
    overrides: Overrides,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Overrides {
    /// Key-value config file; flags given here override its values
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format: csv or json
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write output to this path instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Absolute tolerance per cycle integral
    #[arg(long = "tol-quad", global = true)]
    tol_quad: Option<f64>,
    /// Local error tolerance of the orbit integrator
    #[arg(long = "tol-ode", global = true)]
    tol_ode: Option<f64>,
    /// Bound-state depth |E| in eV
    #[arg(long, global = true)]
    energy_depth: Option<f64>,
    /// Transverse length scale a in Å
    #[arg(long, global = true)]
    well_scale: Option<f64>,
    /// Transverse strength u0 in eV
    #[arg(long, global = true)]
    well_strength: Option<f64>,
    /// Barrier length R in Å
    #[arg(long, global = true)]
    barrier_length: Option<f64>,
    /// Particle mass in electron masses
    #[arg(long, global = true)]
    mass: Option<f64>,
    /// Potential family: quartic, quadratic, cosine, cosine2 or poly
    #[arg(long, global = true)]
    family: Option<String>,
    /// Even-polynomial coefficient as k:c (repeatable, used with --family poly)
    #[arg(long = "poly-coeff", global = true)]
    poly_coeff: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Locate the resonance field and the local action slopes
    Resonance,
    /// Discrete admissible fields: the barrier holds N translation periods
    Scan {
        #[arg(long, default_value_t = 1)]
        n_min: u32,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
    },
    /// Sampled periodic orbit in imaginary time
    Trajectory {
        /// Magnetic parameter; defaults to the resonance value
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 3)]
        cycles: u32,
    },
    /// Tunneling probability over a field grid
    Curve {
        #[arg(long, default_value_t = 0.0)]
        h_min: f64,
        #[arg(long, default_value_t = 12.0)]
        h_max: f64,
        #[arg(long, default_value_t = 25)]
        steps: u32,
    },
    /// Classify which built-in families form the instanton well
    CheckPotential,
}

/// Parse arguments, run the requested command and return the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return 0;
            }
            eprint!("{err}");
            return 1;
        }
    };
    let config = match build_config(&cli.overrides) {
        Ok(config) => config,
        Err(err) => {
            eprintln!("config error: {err}");
            return 1;
        }
    };
    match dispatch(&cli.command, &config) {
        Ok(output) => match write_output(&config, &output) {
            Ok(()) => 0,
            Err(err) => {
                eprintln!("output error: {err}");
                1
            }
        },
        Err(err @ Error::InvalidInput(_)) => {
            eprintln!("error: {err}");
            1
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn build_config(overrides: &Overrides) -> Result<RunConfig> {
    let mut config = match &overrides.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|err| {
                Error::InvalidInput(format!("cannot read {}: {err}", path.display()))
            })?;
            RunConfig::parse_str(&text)?
        }
        None => RunConfig::default(),
    };
    if let Some(v) = overrides.energy_depth {
        config.energy_depth = v;
    }
    if let Some(v) = overrides.well_scale {
        config.well_scale = v;
    }
    if let Some(v) = overrides.well_strength {
        config.well_strength = v;
    }
    if let Some(v) = overrides.barrier_length {
        config.barrier_length = v;
    }
    if let Some(v) = overrides.mass {
        config.particle_mass = v;
    }
    if let Some(v) = &overrides.family {
        config.family = v.clone();
    }
    if !overrides.poly_coeff.is_empty() {
        let mut coeffs = Vec::new();
        for pair in &overrides.poly_coeff {
            coeffs.extend(config::parse_poly_coeffs(pair)?);
        }
        config.poly_coeffs = coeffs;
    }
    if let Some(v) = overrides.tol_quad {
        config.tol_quad = v;
    }
    if let Some(v) = overrides.tol_ode {
        config.tol_ode = v;
    }
    if let Some(v) = &overrides.format {
        config.format = OutputFormat::parse(v)?;
    }
    if let Some(v) = &overrides.out {
        config.out = Some(v.clone());
    }
    config.params()?;
    config.family()?;
    Ok(config)
}

fn dispatch(command: &Command, config: &RunConfig) -> Result<String> {
    match command {
        Command::Resonance => cmd_resonance(config),
        Command::Scan { n_min, n_max } => cmd_scan(config, *n_min, *n_max),
        Command::Trajectory { p, cycles } => cmd_trajectory(config, *p, *cycles),
        Command::Curve {
            h_min,
            h_max,
            steps,
        } => cmd_curve(config, *h_min, *h_max, *steps),
        Command::CheckPotential => cmd_check_potential(config),
    }
}

fn write_output(config: &RunConfig, output: &str) -> std::io::Result<()> {
    match &config.out {
        Some(path) => std::fs::write(path, output),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(output.as_bytes())
        }
    }
}

/// Shortest representation that parses back to the same bits; scientific
/// notation outside a moderate magnitude window keeps rows compact.
fn fmt_f64(value: f64) -> String {
    if value != 0.0 && !(1e-4..1e16).contains(&value.abs()) {
        format!("{value:e}")
    } else {
        value.to_string()
    }
}

fn fmt_opt(value: Option<f64>) -> String {
    value.map(fmt_f64).unwrap_or_default()
}

fn resonance_report(config: &RunConfig) -> Result<ResonanceReport> {
    resonance::find_resonance(
        &config.family()?,
        config.well_ratio(),
        &config.params()?,
        config.tol_quad,
    )
}

fn cmd_resonance(config: &RunConfig) -> Result<String> {
    let report = resonance_report(config)?;
    match config.format {
        OutputFormat::Json => Ok(to_json(&report)),
        OutputFormat::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "p_resonance = {}", fmt_f64(report.p_resonance));
            let _ = writeln!(out, "H_resonance_tesla = {}", fmt_f64(report.field_tesla));
            let _ = writeln!(
                out,
                "f_at_resonance = {}",
                fmt_f64(report.integral_at_resonance)
            );
            let _ = writeln!(out, "action_slope_p = {}", fmt_f64(report.action_slope_p));
            let _ = writeln!(
                out,
                "action_slope_H = {}",
                fmt_f64(report.action_slope_field)
            );
            let _ = writeln!(out, "residual = {}", fmt_f64(report.residual));
            Ok(out)
        }
    }
}

fn cmd_scan(config: &RunConfig, n_min: u32, n_max: u32) -> Result<String> {
    if !(1 <= n_min && n_min <= n_max) {
        return Err(Error::InvalidInput(format!(
            "need 1 <= n_min <= n_max, got {n_min}..{n_max}"
        )));
    }
    let rows = resonance::discrete_fields(
        &config.family()?,
        &config.params()?,
        config.well_ratio(),
        n_min..=n_max,
        config.tol_quad,
    )?;
    match config.format {
        OutputFormat::Json => Ok(to_json(&rows)),
        OutputFormat::Csv => {
            let mut out = String::from("N,p_N,h_N_tesla,A_N,w_N,validity\n");
            for row in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    row.cycles,
                    fmt_opt(row.p),
                    fmt_opt(row.field_tesla),
                    fmt_opt(row.action),
                    fmt_opt(row.probability),
                    row.validity
                );
            }
            Ok(out)
        }
    }
}

fn cmd_trajectory(config: &RunConfig, p: Option<f64>, cycles: u32) -> Result<String> {
    if cycles < 1 {
        return Err(Error::InvalidInput("cycle count must be at least 1".into()));
    }
    let p = match p {
        Some(p) if p > 0.0 => p,
        Some(p) => {
            return Err(Error::InvalidInput(format!(
                "magnetic parameter must be positive, got {p}"
            )))
        }
        None => resonance_report(config)?.p_resonance,
    };
    let problem = DimensionlessProblem::new(p, config.well_ratio())?;
    let eff = EffectivePotential::new(config.family()?, problem);
    let cycle = trajectory::integrate_cycle(&eff, config.tol_ode)?;
    let orbit = trajectory::extend_orbit(&cycle, cycles)?;
    match config.format {
        OutputFormat::Json => Ok(to_json(&SampleRows::from(&orbit))),
        OutputFormat::Csv => {
            let mut out = String::from("s,z,dzds,x_over_a\n");
            for sample in &orbit.samples {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    fmt_f64(sample.s),
                    fmt_f64(sample.z),
                    fmt_f64(sample.dzds),
                    fmt_f64(sample.x_over_a)
                );
            }
            Ok(out)
        }
    }
}

#[derive(serde::Serialize)]
struct SampleRows {
    period: f64,
    translation: f64,
    action_gain: f64,
    n_cycles: u32,
    samples: Vec<SampleRow>,
}

#[derive(serde::Serialize)]
struct SampleRow {
    s: f64,
    z: f64,
    dzds: f64,
    x_over_a: f64,
}

impl From<&trajectory::InstantonOrbit> for SampleRows {
    fn from(orbit: &trajectory::InstantonOrbit) -> Self {
        SampleRows {
            period: orbit.period,
            translation: orbit.translation,
            action_gain: orbit.action_gain,
            n_cycles: orbit.n_cycles,
            samples: orbit
                .samples
                .iter()
                .map(|s| SampleRow {
                    s: s.s,
                    z: s.z,
                    dzds: s.dzds,
                    x_over_a: s.x_over_a,
                })
                .collect(),
        }
    }
}

fn cmd_curve(config: &RunConfig, h_min: f64, h_max: f64, steps: u32) -> Result<String> {
    if !(h_min >= 0.0 && h_min < h_max && steps >= 2) {
        return Err(Error::InvalidInput(format!(
            "need 0 <= h_min < h_max and steps >= 2, got {h_min}..{h_max} in {steps} steps"
        )));
    }
    let fields: Vec<f64> = (0..steps)
        .map(|i| h_min + (h_max - h_min) * i as f64 / (steps as f64 - 1.0))
        .collect();
    let points = resonance::probability_curve(
        &config.family()?,
        &config.params()?,
        config.well_ratio(),
        &fields,
        config.tol_quad,
    )?;
    match config.format {
        OutputFormat::Json => Ok(to_json(&points)),
        OutputFormat::Csv => {
            let mut out = String::from("H_tesla,p,A,w,validity\n");
            for point in points {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    fmt_f64(point.field_tesla),
                    fmt_f64(point.p),
                    fmt_opt(point.action),
                    fmt_opt(point.probability),
                    point.validity
                );
            }
            Ok(out)
        }
    }
}

fn cmd_check_potential(config: &RunConfig) -> Result<String> {
    let problem = DimensionlessProblem::new(1.76, config.well_ratio())?;
    let classified: Vec<(String, crate::potential::WellDiagnostic)> =
        crate::potential::PotentialFamily::builtin()
            .into_iter()
            .map(|family| {
                let eff = EffectivePotential::new(family.clone(), problem);
                (family.name().to_string(), eff.well())
            })
            .collect();
    match config.format {
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct Row {
                family: String,
                well: bool,
                diagnostic: String,
            }
            let rows: Vec<Row> = classified
                .into_iter()
                .map(|(family, diag)| Row {
                    family,
                    well: diag.exists,
                    diagnostic: diag.to_string(),
                })
                .collect();
            Ok(to_json(&rows))
        }
        OutputFormat::Csv => {
            let mut out = String::from("family,well,diagnostic\n");
            for (family, diag) in classified {
                let _ = writeln!(out, "{},{},\"{}\"", family, diag.exists, diag);
            }
            Ok(out)
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable output");
    text.push('\n');
    text
}
