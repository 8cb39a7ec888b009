//! Command-line surface and the CSV / JSON-lines emitters behind it.
//!
//! Every command reports times as `gamma t`. Numbers are printed with 12
//! significant digits in a fixed format so that repeated runs produce
//! byte-identical files.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::collective_params::{coupling_from_separation, CollectiveCoupling};
use crate::concurrence::x_state_weights;
use crate::dynamics::{default_step, integrate_sampled, ClosedForm, Trajectory};
use crate::error::Error;
use crate::events::{
    approx_death_revival, closed_form_events, death_time_independent, death_time_scan_with,
    second_revival_estimate, Crossing, DEFAULT_T_MAX,
};

/// Separations of the death-time figure, in wavelengths.
pub const FIG1_SEPARATIONS: [(&str, f64); 4] = [
    ("lambda", 1.0),
    ("lambda_3", 1.0 / 3.0),
    ("lambda_6", 1.0 / 6.0),
    ("lambda_20", 1.0 / 20.0),
];

pub const EVOLVE_HEADER: &str = "t_gamma,rho_ee,rho_gg,rho_ss,rho_aa,re_rho_eg,im_rho_eg,C,C1,C2";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Print gamma12/gamma and Omega12/gamma
    Params,
    /// Write the closed-form trajectory as CSV
    Evolve,
    /// Report death and revival times as one JSON line
    Events,
    /// Death time versus p for four separations
    Fig1,
    /// Concurrence for collective and independent atoms, p = 0.9
    Fig2,
    /// Coherence, symmetric population and concurrence at r = lambda/20, p = 0.9
    Fig3,
}

/// Interatomic distance, or atoms that do not interact at all.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeparationArg {
    Independent,
    Wavelengths(f64),
}

impl FromStr for SeparationArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ind" | "independent" => Ok(Self::Independent),
            _ => s
                .parse::<f64>()
                .map(Self::Wavelengths)
                .map_err(|e| format!("expected a number or `ind`: {e}")),
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "collective-qubits",
    version,
    about = "Entanglement dark periods and revivals of two atoms in a common vacuum"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub mode: Mode,
    /// Weight of |e> in the initial state sqrt(p)|e> + sqrt(1-p)|g>
    #[arg(long, default_value_t = 0.9)]
    pub p: f64,
    /// Separation r/lambda, or `ind` for independent atoms
    #[arg(long = "r", default_value = "0.05")]
    pub r: SeparationArg,
    /// End of the time grid, in units of 1/gamma
    #[arg(long = "t-end")]
    pub t_end: Option<f64>,
    /// Grid step, in units of 1/gamma
    #[arg(long)]
    pub dt: Option<f64>,
    /// Output file (stdout when omitted; figN.csv for figure modes)
    #[arg(long = "out")]
    pub output_path: Option<PathBuf>,
    /// Add master-equation integrator columns to `evolve`
    #[arg(long)]
    pub oracle: bool,
    /// Single-atom decay rate
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Model(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Model(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl RunConfig {
    pub fn coupling(&self) -> Result<CollectiveCoupling, Error> {
        match self.r {
            SeparationArg::Independent => CollectiveCoupling::independent(self.gamma),
            SeparationArg::Wavelengths(r) => coupling_from_separation(r, self.gamma),
        }
    }

    fn validate(&self) -> Result<(), Error> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::Domain {
                what: "p",
                value: self.p,
                reason: "probability must lie in [0, 1]",
            });
        }
        for (name, v) in [("t-end", self.t_end), ("dt", self.dt)] {
            if let Some(v) = v {
                if !(v.is_finite() && v > 0.0) {
                    return Err(Error::Config(format!("--{name} must be positive, got {v}")));
                }
            }
        }
        Ok(())
    }
}

/// Runs one command, writing its report to `--out` or stdout.
pub fn run(config: &RunConfig) -> Result<(), CliError> {
    config.validate()?;
    match config.mode {
        Mode::Params => emit(config.output_path.as_deref(), &cmd_params(config)?),
        Mode::Evolve => emit(config.output_path.as_deref(), &cmd_evolve(config)?),
        Mode::Events => emit(config.output_path.as_deref(), &cmd_events(config)?),
        Mode::Fig1 | Mode::Fig2 | Mode::Fig3 => {
            let (name, text) = match config.mode {
                Mode::Fig1 => ("fig1.csv", fig1_csv(config.gamma)?),
                Mode::Fig2 => ("fig2.csv", fig2_csv(config.gamma, config.t_end, config.dt)?),
                _ => ("fig3.csv", fig3_csv(config.gamma, config.t_end, config.dt)?),
            };
            let path = config
                .output_path
                .clone()
                .unwrap_or_else(|| PathBuf::from(name));
            write_file(&path, &text)
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => write_file(path, text),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Formats `x` rounded to `digits` significant digits in its shortest
/// decimal form. Magnitudes below `1e-4` use exponent notation.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("valid float");
    if rounded.abs() < 1e-4 {
        format!("{rounded:e}")
    } else {
        format!("{rounded}")
    }
}

fn num(x: f64) -> String {
    fmt_sig(x, 12)
}

fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn cmd_params(config: &RunConfig) -> Result<String, Error> {
    let c = config.coupling()?;
    Ok(format!(
        "gamma12/gamma = {}\nomega12/gamma = {}\n",
        fmt_sig(c.gamma12 / c.gamma, 6),
        fmt_sig(c.omega12 / c.gamma, 6)
    ))
}

fn closed_form(config: &RunConfig, coupling: &CollectiveCoupling) -> Result<ClosedForm, Error> {
    ClosedForm::new(config.p, coupling.gamma, coupling.gamma12)
}

fn push_sample_fields(row: &mut String, sample: &crate::dynamics::Sample) {
    let x = &sample.x;
    let w = &sample.weights;
    for v in [
        x.rho_ee,
        x.rho_gg,
        x.rho_ss,
        x.rho_aa,
        x.rho_eg.re,
        x.rho_eg.im,
        w.c,
        w.c1,
        w.c2,
    ] {
        row.push(',');
        row.push_str(&num(v));
    }
}

/// Closed-form trajectory as CSV; `--oracle` appends the same nine columns
/// from the master-equation integrator with a `_num` suffix.
pub fn cmd_evolve(config: &RunConfig) -> Result<String, Error> {
    let coupling = config.coupling()?;
    let model = closed_form(config, &coupling)?;
    let t_end = config.t_end.unwrap_or(10.0);
    let dt = config.dt.unwrap_or(0.01);
    let analytic = Trajectory::closed_form_uniform(&model, t_end, dt)?;
    let numeric = if config.oracle {
        let rho0 = model.elements(0.0).to_product();
        let step = default_step(&coupling);
        Some(integrate_sampled(&rho0, &coupling, t_end, dt, step)?)
    } else {
        None
    };

    let mut out = String::from(EVOLVE_HEADER);
    if numeric.is_some() {
        for col in EVOLVE_HEADER.split(',').skip(1) {
            let _ = write!(out, ",{col}_num");
        }
    }
    out.push('\n');
    for (k, (t, sample)) in analytic.iter().enumerate() {
        out.push_str(&num(t));
        push_sample_fields(&mut out, sample);
        if let Some(numeric) = &numeric {
            push_sample_fields(&mut out, &numeric.samples()[k]);
        }
        out.push('\n');
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
struct EventsRecord {
    p: f64,
    r_over_lambda: Option<f64>,
    gamma: f64,
    gamma12: f64,
    omega12: f64,
    death_time: Option<f64>,
    first_revival: Option<f64>,
    second_revival: Option<f64>,
    crossings: Vec<Crossing>,
    dark_intervals: Vec<(f64, f64)>,
    eq14: Option<f64>,
    eq15_roots: Option<(f64, f64)>,
    eq16_estimate: Option<f64>,
}

/// One JSON line with detected events and the closed-form reference times.
pub fn cmd_events(config: &RunConfig) -> Result<String, Error> {
    let coupling = config.coupling()?;
    let model = closed_form(config, &coupling)?;
    let t_end = config.t_end.unwrap_or(DEFAULT_T_MAX / coupling.gamma);
    let dt = config.dt.unwrap_or(1e-3 / coupling.gamma);
    let events = closed_form_events(&model, t_end, dt)?;
    let record = EventsRecord {
        p: config.p,
        r_over_lambda: coupling.separation.map(|s| s.r_over_lambda()),
        gamma: coupling.gamma,
        gamma12: coupling.gamma12,
        omega12: coupling.omega12,
        death_time: events.death_time,
        first_revival: events.first_revival,
        second_revival: events.second_revival,
        crossings: events.crossings,
        dark_intervals: events.dark_intervals,
        eq14: death_time_independent(config.p, coupling.gamma),
        eq15_roots: approx_death_revival(config.p, coupling.gamma),
        eq16_estimate: second_revival_estimate(config.p, &coupling).ok(),
    };
    let mut line = serde_json::to_string(&record).expect("plain data serializes");
    line.push('\n');
    Ok(line)
}

/// Death time against `p` on `0.01, ..., 0.99` for each separation of
/// [`FIG1_SEPARATIONS`]; empty cells mark states that never die.
pub fn fig1_csv(gamma: f64) -> Result<String, Error> {
    let grid: Vec<f64> = (1..100).map(|k| k as f64 / 100.0).collect();
    let columns = FIG1_SEPARATIONS
        .iter()
        .map(|&(_, r)| {
            let coupling = coupling_from_separation(r, gamma)?;
            death_time_scan_with(&coupling, &grid, DEFAULT_T_MAX / gamma)
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut out = String::from("p");
    for (name, _) in FIG1_SEPARATIONS {
        let _ = write!(out, ",death_r_{name}");
    }
    out.push('\n');
    for (k, &p) in grid.iter().enumerate() {
        out.push_str(&num(p));
        for column in &columns {
            out.push(',');
            out.push_str(&opt_num(column[k].1));
        }
        out.push('\n');
    }
    Ok(out)
}

fn figure_grid(gamma: f64, t_end: Option<f64>, dt: Option<f64>) -> (f64, f64) {
    (t_end.unwrap_or(10.0 / gamma), dt.unwrap_or(1e-2 / gamma))
}

/// Concurrence at `p = 0.9` for `r = lambda/20` and for independent atoms.
pub fn fig2_csv(gamma: f64, t_end: Option<f64>, dt: Option<f64>) -> Result<String, Error> {
    let (t_end, dt) = figure_grid(gamma, t_end, dt);
    let collective = coupling_from_separation(0.05, gamma)?;
    let coll = Trajectory::closed_form_uniform(
        &ClosedForm::new(0.9, gamma, collective.gamma12)?,
        t_end,
        dt,
    )?;
    let ind = Trajectory::closed_form_uniform(&ClosedForm::new(0.9, gamma, 0.0)?, t_end, dt)?;
    let mut out = String::from("t_gamma,C_collective,C_independent\n");
    for ((t, a), b) in coll.iter().zip(ind.concurrence()) {
        let _ = writeln!(out, "{},{},{}", num(t * gamma), num(a.weights.c), num(b));
    }
    Ok(out)
}

/// `2|rho_eg|`, `rho_ss` and `C` at `p = 0.9`, `r = lambda/20`.
pub fn fig3_csv(gamma: f64, t_end: Option<f64>, dt: Option<f64>) -> Result<String, Error> {
    let (t_end, dt) = figure_grid(gamma, t_end, dt);
    let collective = coupling_from_separation(0.05, gamma)?;
    let model = ClosedForm::new(0.9, gamma, collective.gamma12)?;
    let traj = Trajectory::closed_form_uniform(&model, t_end, dt)?;
    let mut out = String::from("t_gamma,two_abs_rho_eg,rho_ss,C\n");
    for (t, s) in traj.iter() {
        let w = x_state_weights(&s.x);
        let _ = writeln!(
            out,
            "{},{},{},{}",
            num(t * gamma),
            num(2.0 * s.x.rho_eg.norm()),
            num(s.x.rho_ss),
            num(w.c)
        );
    }
    Ok(out)
}

/// Writes `fig1.csv`, `fig2.csv` and `fig3.csv` into `dir`.
pub fn cmd_figures(dir: &Path, gamma: f64) -> Result<Vec<PathBuf>, CliError> {
    let files = [
        ("fig1.csv", fig1_csv(gamma)?),
        ("fig2.csv", fig2_csv(gamma, None, None)?),
        ("fig3.csv", fig3_csv(gamma, None, None)?),
    ];
    files
        .into_iter()
        .map(|(name, text)| {
            let path = dir.join(name);
            write_file(&path, &text).map(|_| path)
        })
        .collect()
}
