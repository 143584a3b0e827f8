use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A violated [`ModelParams`](crate::ModelParams) invariant.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("non-finite value: {name} = {value}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("non-positive frequency: {name} = {value} meV")]
    NonPositiveFrequency { name: &'static str, value: f64 },
    #[error("negative coupling: {name} = {value} meV")]
    NegativeCoupling { name: &'static str, value: f64 },
    #[error("negative damping: {name} = {value} meV")]
    NegativeDamping { name: &'static str, value: f64 },
    #[error("negative mean photon number: n_c_bar = {0}")]
    NegativePhotonNumber(f64),
    #[error("invalid grid: {0}")]
    Grid(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`, got {text:?}")]
    Syntax { line: usize, text: String },
    #[error("line {line}: invalid number for {key}: {value:?}")]
    Number {
        line: usize,
        key: String,
        value: String,
    },
    #[error("line {line}: unknown key: {key}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key: {key}")]
    DuplicateKey { line: usize, key: String },
    #[error("missing key: {0}")]
    MissingKey(&'static str),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("{}: {source}", path.display())]
    Config {
        path: PathBuf,
        #[source]
        source: ConfigError,
    },
    #[error(transparent)]
    ConfigText(#[from] ConfigError),
    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(
        "root iteration did not converge after {iterations} iterations (residual {residual:.3e})"
    )]
    NoConvergence {
        iterations: usize,
        best: [num_complex::Complex64; 3],
        residual: f64,
    },
    #[error("poles too close for residue decomposition (separation {separation:.3e} meV)")]
    DegeneratePoles { separation: f64 },
    #[error("undamped correlation: spectrum integral diverges")]
    Undamped,
    #[error("sweep failed at {parameter} = {value}: {source}")]
    Sweep {
        parameter: &'static str,
        value: f64,
        #[source]
        source: Box<Error>,
    },
    #[error("invalid sweep: {0}")]
    SweepSpec(String),
}

impl Error {
    /// Whether the failure is numerical (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::NoConvergence { .. } | Error::DegeneratePoles { .. } | Error::Undamped => true,
            Error::Sweep { source, .. } => source.is_numerical(),
            _ => false,
        }
    }
}
