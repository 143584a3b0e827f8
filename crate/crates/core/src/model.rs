//! Physical parameters of the three-mode system and their file format.
//!
//! Units: ℏ = 1 and every frequency, coupling and damping rate is an energy
//! in meV. Times are therefore in ℏ/meV (see [`HBAR_PS_PER_MEV`]).

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{ConfigError, Error, ParamError, Result};

/// ℏ expressed in meV·ps, i.e. one time unit ℏ/meV in picoseconds.
pub const HBAR_PS_PER_MEV: f64 = 0.658_211_956_9;

/// Relative Wannier detuning of the reference setup, ω_W = ω_F (1 + δ).
pub const REFERENCE_DETUNING: f64 = 1e-2;

/// Inputs of the single-mode model.
///
/// Couplings are stored linearly; their squares are formed when the pole
/// polynomial is built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Wannier exciton energy ω_W.
    pub omega_w: f64,
    /// Frenkel exciton energy ω_F.
    pub omega_f: f64,
    /// Cavity mode energy Ω.
    pub omega_c: f64,
    /// Wannier-cavity coupling Γ₁₃.
    pub coupling_w: f64,
    /// Frenkel-cavity coupling Γ₂₃.
    pub coupling_f: f64,
    /// Cavity damping γ₁.
    pub gamma_c: f64,
    /// Wannier damping γ₂.
    pub gamma_w: f64,
    /// Frenkel damping γ₃.
    pub gamma_f: f64,
    /// Mean initial cavity photon number n̄_c.
    pub n_photons: f64,
}

/// Names used in config files, in canonical order.
pub const CONFIG_KEYS: [&str; 9] = [
    "omega_W", "omega_F", "Omega", "Gamma13", "Gamma23", "gamma1", "gamma2", "gamma3", "n_c_bar",
];

impl ModelParams {
    /// The reference parameter set: ω_F = Ω = 1562 meV, ω_W = ω_F (1 + 10⁻²),
    /// Γ₂₃² = 16 meV², Γ₁₃² = 8 meV², γ = (0.1, 0.18, 0.12) meV, n̄_c = 1.
    pub fn reference() -> Self {
        ModelParams {
            // 1562 × 1.01, written out so the value is the nearest double to
            // the exact product.
            omega_w: 1577.62,
            omega_f: 1562.0,
            omega_c: 1562.0,
            coupling_w: 8.0_f64.sqrt(),
            coupling_f: 4.0,
            gamma_c: 0.1,
            gamma_w: 0.18,
            gamma_f: 0.12,
            n_photons: 1.0,
        }
    }

    /// Same parameters with both exciton-cavity couplings switched off.
    pub fn decoupled(self) -> Self {
        ModelParams {
            coupling_w: 0.0,
            coupling_f: 0.0,
            ..self
        }
    }

    pub fn bare_frequencies(&self) -> [f64; 3] {
        [self.omega_c, self.omega_w, self.omega_f]
    }

    pub fn dampings(&self) -> [f64; 3] {
        [self.gamma_c, self.gamma_w, self.gamma_f]
    }

    pub fn min_damping(&self) -> f64 {
        self.dampings().into_iter().fold(f64::INFINITY, f64::min)
    }

    pub fn max_damping(&self) -> f64 {
        self.dampings()
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// At least one damping rate is strictly positive. Spectra computed by
    /// integrating the correlation function need this.
    pub fn is_damped(&self) -> bool {
        self.max_damping() > 0.0
    }

    fn values(&self) -> [f64; 9] {
        [
            self.omega_w,
            self.omega_f,
            self.omega_c,
            self.coupling_w,
            self.coupling_f,
            self.gamma_c,
            self.gamma_w,
            self.gamma_f,
            self.n_photons,
        ]
    }

    fn from_values(v: [f64; 9]) -> Self {
        ModelParams {
            omega_w: v[0],
            omega_f: v[1],
            omega_c: v[2],
            coupling_w: v[3],
            coupling_f: v[4],
            gamma_c: v[5],
            gamma_w: v[6],
            gamma_f: v[7],
            n_photons: v[8],
        }
    }

    /// Checks every invariant, reporting the first violation.
    pub fn validate(self) -> Result<Self, ParamError> {
        let v = self.values();
        for (name, value) in CONFIG_KEYS.iter().zip(v) {
            if !value.is_finite() {
                return Err(ParamError::NonFinite { name, value });
            }
        }
        for i in 0..3 {
            if v[i] <= 0.0 {
                return Err(ParamError::NonPositiveFrequency {
                    name: CONFIG_KEYS[i],
                    value: v[i],
                });
            }
        }
        for i in 3..5 {
            if v[i] < 0.0 {
                return Err(ParamError::NegativeCoupling {
                    name: CONFIG_KEYS[i],
                    value: v[i],
                });
            }
        }
        for i in 5..8 {
            if v[i] < 0.0 {
                return Err(ParamError::NegativeDamping {
                    name: CONFIG_KEYS[i],
                    value: v[i],
                });
            }
        }
        if self.n_photons < 0.0 {
            return Err(ParamError::NegativePhotonNumber(self.n_photons));
        }
        Ok(self)
    }

    /// Parses the flat `key = value` format.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut seen: HashMap<&str, f64> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(ConfigError::Syntax {
                    line,
                    text: raw.to_string(),
                }
                .into());
            };
            let (key, value) = (key.trim(), value.trim());
            let Some(&canonical) = CONFIG_KEYS.iter().find(|k| **k == key) else {
                return Err(ConfigError::UnknownKey {
                    line,
                    key: key.to_string(),
                }
                .into());
            };
            let number: f64 = value.parse().map_err(|_| ConfigError::Number {
                line,
                key: key.to_string(),
                value: value.to_string(),
            })?;
            if seen.insert(canonical, number).is_some() {
                return Err(ConfigError::DuplicateKey {
                    line,
                    key: key.to_string(),
                }
                .into());
            }
        }
        let mut values = [0.0; 9];
        for (slot, key) in values.iter_mut().zip(CONFIG_KEYS) {
            *slot = *seen.get(key).ok_or(ConfigError::MissingKey(key))?;
        }
        Ok(Self::from_values(values).validate()?)
    }

    /// Serializes to the config format. Values use the shortest decimal
    /// representation that parses back to the same double.
    pub fn to_config_string(&self) -> String {
        let mut out = String::new();
        for (key, value) in CONFIG_KEYS.iter().zip(self.values()) {
            let _ = writeln!(out, "{key} = {value:?}");
        }
        out
    }
}

/// Reads and validates a config file.
pub fn params_from_config(path: impl AsRef<Path>) -> Result<ModelParams> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    ModelParams::from_config_str(&text).map_err(|e| match e {
        Error::ConfigText(source) => Error::Config {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })
}

/// Uniform frequency grid, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralGrid {
    omega_min: f64,
    omega_max: f64,
    n_points: usize,
}

impl SpectralGrid {
    pub fn new(omega_min: f64, omega_max: f64, n_points: usize) -> Result<Self, ParamError> {
        if !(omega_min.is_finite() && omega_max.is_finite()) {
            return Err(ParamError::Grid("bounds must be finite".into()));
        }
        if omega_min >= omega_max {
            return Err(ParamError::Grid(format!(
                "omega_min ({omega_min}) must be below omega_max ({omega_max})"
            )));
        }
        if n_points < 2 {
            return Err(ParamError::Grid(format!(
                "need at least 2 points, got {n_points}"
            )));
        }
        Ok(SpectralGrid {
            omega_min,
            omega_max,
            n_points,
        })
    }

    pub fn omega_min(&self) -> f64 {
        self.omega_min
    }

    pub fn omega_max(&self) -> f64 {
        self.omega_max
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        (self.omega_max - self.omega_min) / (self.n_points - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.omega_max
        } else {
            self.omega_min + i as f64 * self.spacing()
        }
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n_points).map(|i| self.point(i))
    }
}
