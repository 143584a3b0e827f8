//! The `polariton` command-line tool.
//!
//! Exit status: 0 on success, 1 for bad input (flags, config, parameters),
//! 2 for numerical failures. CSV goes to `--output` or stdout, diagnostics
//! to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::csv;
use crate::dynamics::{evolve_oracle, mode_decomposition, reconstruct_propagator};
use crate::error::Result;
use crate::model::{params_from_config, ModelParams, SpectralGrid, CONFIG_KEYS};
use crate::pole_solver::{build_pole_cubic, solve_cubic_analytic, PoleSet};
use crate::spectrum::{default_grid, find_peaks, EmissionSpectrum, SpectrumMethod};
use crate::sweep::{run_sweep, SweepParameter, SweepSpec};

#[derive(Debug, Parser)]
#[command(
    name = "polariton",
    about = "Poles, dynamics and emission spectra of hybrid exciton-polaritons"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Parameter file (`key = value` lines).
    #[arg(long)]
    pub config: PathBuf,
    /// Write CSV here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub omega_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega_max: Option<f64>,
    #[arg(long)]
    pub n_points: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum MethodArg {
    ClosedForm,
    Lorentz,
    Quadrature,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<SpectrumMethod> {
        match self {
            MethodArg::ClosedForm => vec![SpectrumMethod::ClosedForm],
            MethodArg::Lorentz => vec![SpectrumMethod::LorentzApprox],
            MethodArg::Quadrature => vec![SpectrumMethod::Quadrature],
            MethodArg::All => SpectrumMethod::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Complex eigenfrequencies as re_omega,im_omega rows.
    Poles {
        #[command(flatten)]
        common: Common,
    },
    /// Cavity row of the propagator from residues and from exp(Mt).
    Evolve {
        #[command(flatten)]
        common: Common,
        /// Final time in ħ/meV.
        #[arg(long, default_value_t = 20.0)]
        t_max: f64,
        /// Number of time samples, including t = 0.
        #[arg(long, default_value_t = 201)]
        n_t: usize,
    },
    /// Emission spectrum on a frequency grid.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Refined spectral peaks.
    Peaks {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Quadrature)]
        method: MethodArg,
    },
    /// Pole branches and peaks along a parameter sweep.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// One of delta, Gamma13, Gamma23, gamma1, gamma2, gamma3, Omega.
        #[arg(long)]
        parameter: SweepParameter,
        #[arg(long, allow_hyphen_values = true)]
        start: f64,
        #[arg(long, allow_hyphen_values = true)]
        stop: f64,
        #[arg(long)]
        steps: usize,
    },
    /// Check a parameter file and echo the parsed values.
    Validate {
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Poles { common }
            | Command::Evolve { common, .. }
            | Command::Spectrum { common, .. }
            | Command::Peaks { common, .. }
            | Command::Sweep { common, .. }
            | Command::Validate { common } => common,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli.command, stderr) {
        Ok(text) => match &cli.command.common().output {
            Some(path) => match std::fs::write(path, text) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    1
                }
            },
            None => match stdout.write_all(text.as_bytes()) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    1
                }
            },
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_numerical() {
                2
            } else {
                1
            }
        }
    }
}

fn execute(command: &Command, stderr: &mut dyn Write) -> Result<String> {
    let params = params_from_config(&command.common().config)?;
    match command {
        Command::Validate { .. } => {
            if !params.is_damped() {
                let _ = writeln!(
                    stderr,
                    "warning: all damping rates are zero; spectra by quadrature are unavailable"
                );
            }
            Ok(validate_csv(&params))
        }
        Command::Poles { .. } => Ok(csv::poles_csv(&solve(&params))),
        Command::Evolve { t_max, n_t, .. } => evolve(&params, *t_max, *n_t),
        Command::Spectrum { grid, method, .. } => {
            let poles = solve(&params);
            let grid = resolve_grid(grid, &poles)?;
            let spectrum = EmissionSpectrum::new(&params, &poles)?;
            let columns = method
                .methods()
                .into_iter()
                .map(|m| Ok((m, spectrum.curve(m, &grid)?.values)))
                .collect::<Result<Vec<_>>>()?;
            Ok(csv::spectrum_csv(&grid, &columns))
        }
        Command::Peaks { grid, method, .. } => {
            let poles = solve(&params);
            let grid = resolve_grid(grid, &poles)?;
            let spectrum = EmissionSpectrum::new(&params, &poles)?;
            let sets = method
                .methods()
                .into_iter()
                .map(|m| {
                    if m == SpectrumMethod::Quadrature {
                        spectrum.require_damped()?;
                    }
                    Ok((m, find_peaks(|w| spectrum.evaluate(m, w), &grid)))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(csv::peaks_csv(&sets))
        }
        Command::Sweep {
            parameter,
            start,
            stop,
            steps,
            ..
        } => {
            let result = run_sweep(&SweepSpec {
                parameter: *parameter,
                start: *start,
                stop: *stop,
                n_steps: *steps,
                base: params,
            })?;
            Ok(csv::sweep_csv(&result))
        }
    }
}

fn solve(params: &ModelParams) -> PoleSet {
    solve_cubic_analytic(&build_pole_cubic(params))
}

fn resolve_grid(args: &GridArgs, poles: &PoleSet) -> Result<SpectralGrid> {
    let default = default_grid(poles);
    Ok(SpectralGrid::new(
        args.omega_min.unwrap_or(default.omega_min()),
        args.omega_max.unwrap_or(default.omega_max()),
        args.n_points.unwrap_or(default.len()),
    )?)
}

fn evolve(params: &ModelParams, t_max: f64, n_t: usize) -> Result<String> {
    if !(t_max.is_finite() && t_max >= 0.0) || n_t < 2 {
        return Err(crate::error::ParamError::Grid(format!(
            "time range needs t_max >= 0 and n_t >= 2 (got {t_max}, {n_t})"
        ))
        .into());
    }
    let poles = solve(params);
    let coeffs = mode_decomposition(params, &poles)?;
    let rows: Vec<_> = (0..n_t)
        .map(|i| {
            let t = t_max * i as f64 / (n_t - 1) as f64;
            (
                t,
                reconstruct_propagator(&coeffs, &poles, t),
                evolve_oracle(params, t).cavity_row(),
            )
        })
        .collect();
    Ok(csv::evolve_csv(&rows))
}

fn validate_csv(params: &ModelParams) -> String {
    let text = params.to_config_string();
    let mut out = String::from("key,value\n");
    for (line, key) in text.lines().zip(CONFIG_KEYS) {
        let value = line.split_once('=').map_or("", |(_, v)| v.trim());
        out.push_str(&format!("{key},{value}\n"));
    }
    out
}
