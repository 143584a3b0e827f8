//! Hybrid exciton-polaritons: a Wannier exciton and a Frenkel exciton coupled
//! through one lossy cavity mode.
//!
//! The crate computes
//!
//! * the three complex polariton eigenfrequencies ([`pole_solver`]), by
//!   Cardano's formula and independently by Durand-Kerner iteration;
//! * the cavity operator's time evolution as a residue sum ([`dynamics`]),
//!   checked against a direct matrix exponential;
//! * the stationary emission spectrum and its peaks ([`spectrum`]);
//! * parameter sweeps and anticrossing tables ([`sweep`]).
//!
//! Energies are in meV with ℏ = 1.
//!
//! ```
//! use hybrid_polariton::{ModelParams, pole_solver};
//!
//! let params = ModelParams::reference();
//! let poles = pole_solver::poles(&params);
//! assert!(poles.decay_rates().iter().all(|&g| (0.1..=0.18).contains(&g)));
//! ```

pub mod cli;
pub mod csv;
pub mod dynamics;
pub mod error;
pub mod model;
pub mod pole_solver;
pub mod spectrum;
pub mod sweep;

pub use dynamics::{
    evolve_oracle, mode_decomposition, reconstruct_propagator, ModeCoefficients, Propagator,
};
pub use error::{ConfigError, Error, ParamError, Result};
pub use model::{params_from_config, ModelParams, SpectralGrid};
pub use pole_solver::{
    build_pole_cubic, poles, solve_cubic_analytic, solve_cubic_numeric, CubicCoefficients, PoleSet,
};
pub use spectrum::{
    correlation, find_peaks, spectrum_closed_form, spectrum_lorentz_approx, spectrum_quadrature,
    EmissionSpectrum, PeakSet, SpectrumCurve, SpectrumMethod,
};
pub use sweep::{run_sweep, SweepParameter, SweepResult, SweepSpec};
