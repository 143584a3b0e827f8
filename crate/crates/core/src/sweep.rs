//! One-parameter sweeps: pole branches and spectral peaks along a line in
//! parameter space.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::dynamics::mode_decomposition;
use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::pole_solver::{build_pole_cubic, solve_cubic_analytic, PoleSet};
use crate::spectrum::{default_grid, find_peaks, EmissionSpectrum, PeakSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParameter {
    /// Relative Wannier detuning: ω_W = ω_F (1 + δ).
    Delta,
    CouplingW,
    CouplingF,
    GammaC,
    GammaW,
    GammaF,
    OmegaC,
}

impl SweepParameter {
    pub fn name(&self) -> &'static str {
        match self {
            SweepParameter::Delta => "delta",
            SweepParameter::CouplingW => "Gamma13",
            SweepParameter::CouplingF => "Gamma23",
            SweepParameter::GammaC => "gamma1",
            SweepParameter::GammaW => "gamma2",
            SweepParameter::GammaF => "gamma3",
            SweepParameter::OmegaC => "Omega",
        }
    }

    /// `base` with this parameter set to `value`.
    pub fn apply(&self, base: &ModelParams, value: f64) -> ModelParams {
        let mut p = *base;
        match self {
            SweepParameter::Delta => p.omega_w = p.omega_f * (1.0 + value),
            SweepParameter::CouplingW => p.coupling_w = value,
            SweepParameter::CouplingF => p.coupling_f = value,
            SweepParameter::GammaC => p.gamma_c = value,
            SweepParameter::GammaW => p.gamma_w = value,
            SweepParameter::GammaF => p.gamma_f = value,
            SweepParameter::OmegaC => p.omega_c = value,
        }
        p
    }
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepParameter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use SweepParameter::*;
        [Delta, CouplingW, CouplingF, GammaC, GammaW, GammaF, OmegaC]
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown sweep parameter: {s}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub parameter: SweepParameter,
    pub start: f64,
    pub stop: f64,
    pub n_steps: usize,
    pub base: ModelParams,
}

impl SweepSpec {
    /// Linearly spaced values, endpoints included.
    pub fn values(&self) -> Vec<f64> {
        let step = (self.stop - self.start) / (self.n_steps - 1) as f64;
        (0..self.n_steps)
            .map(|i| {
                if i + 1 == self.n_steps {
                    self.stop
                } else {
                    self.start + i as f64 * step
                }
            })
            .collect()
    }

    fn check(&self) -> Result<()> {
        if !(self.start.is_finite() && self.stop.is_finite()) || self.start == self.stop {
            return Err(Error::SweepSpec(format!(
                "start ({}) and stop ({}) must be finite and distinct",
                self.start, self.stop
            )));
        }
        if self.n_steps < 2 {
            return Err(Error::SweepSpec(format!(
                "need at least 2 steps, got {}",
                self.n_steps
            )));
        }
        self.base.validate()?;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    /// Poles in branch order: index k follows the same branch in every row.
    pub poles: [Complex64; 3],
    pub peaks: PeakSet,
}

impl SweepRow {
    pub fn splittings(&self) -> Vec<f64> {
        self.peaks.splittings()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub parameter: SweepParameter,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// Real parts of branch k along the sweep.
    pub fn branch(&self, k: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r.poles[k].re).collect()
    }
}

/// Runs the sweep, stopping at the first row that fails.
///
/// Each row solves the poles, evaluates the integrated spectrum on the
/// default window and locates its peaks. Branches are followed from the first
/// row's sorted order by nearest-distance matching.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.check()?;
    let mut rows: Vec<SweepRow> = Vec::with_capacity(spec.n_steps);
    for value in spec.values() {
        let (set, peaks) =
            evaluate_row(spec.parameter, &spec.base, value).map_err(|e| Error::Sweep {
                parameter: spec.parameter.name(),
                value,
                source: Box::new(e),
            })?;
        let poles = match rows.last() {
            Some(prev) => match_branches(&prev.poles, set.poles()),
            None => set.poles(),
        };
        rows.push(SweepRow {
            value,
            poles,
            peaks,
        });
    }
    Ok(SweepResult {
        parameter: spec.parameter,
        rows,
    })
}

fn evaluate_row(
    parameter: SweepParameter,
    base: &ModelParams,
    value: f64,
) -> Result<(PoleSet, PeakSet)> {
    let params = parameter.apply(base, value).validate()?;
    let poles = solve_cubic_analytic(&build_pole_cubic(&params));
    let coeffs = mode_decomposition(&params, &poles)?;
    let spectrum = EmissionSpectrum::from_coefficients(&params, &poles, &coeffs);
    spectrum.require_damped()?;
    let peaks = find_peaks(|w| spectrum.quadrature(w), &default_grid(&poles));
    Ok((poles, peaks))
}

/// Reorders `next` to minimize the total distance to `prev`.
pub fn match_branches(prev: &[Complex64; 3], next: [Complex64; 3]) -> [Complex64; 3] {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let cost = |p: &[usize; 3]| -> f64 { (0..3).map(|k| (next[p[k]] - prev[k]).norm()).sum() };
    let best = PERMS
        .iter()
        .min_by(|a, b| cost(a).total_cmp(&cost(b)))
        .expect("non-empty");
    best.map(|i| next[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(parameter: SweepParameter, start: f64, stop: f64, n_steps: usize) -> SweepSpec {
        SweepSpec {
            parameter,
            start,
            stop,
            n_steps,
            base: ModelParams::reference(),
        }
    }

    #[test]
    fn two_steps_two_rows() {
        let r = run_sweep(&spec(SweepParameter::GammaC, 0.1, 0.2, 2)).unwrap();
        assert_eq!(r.rows.len(), 2);
        assert_eq!(r.rows[0].value, 0.1);
        assert_eq!(r.rows[1].value, 0.2);
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(matches!(
            run_sweep(&spec(SweepParameter::Delta, 0.01, 0.01, 5)),
            Err(Error::SweepSpec(_))
        ));
        assert!(matches!(
            run_sweep(&spec(SweepParameter::Delta, 0.0, 0.01, 1)),
            Err(Error::SweepSpec(_))
        ));
    }

    #[test]
    fn bad_row_aborts_with_value() {
        let err = run_sweep(&spec(SweepParameter::GammaW, 0.1, -0.1, 3)).unwrap_err();
        match err {
            Error::Sweep {
                parameter,
                value,
                source,
            } => {
                assert_eq!(parameter, "gamma2");
                assert_eq!(value, -0.1);
                assert!(matches!(*source, Error::Param(_)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn decoupled_rows_are_bare_poles() {
        let mut s = spec(SweepParameter::CouplingW, 1.0, 0.0, 5);
        s.base.coupling_f = 0.0;
        let r = run_sweep(&s).unwrap();
        let last = r.rows.last().unwrap();
        let expected = [
            Complex64::new(1562.0, -0.1),
            Complex64::new(1562.0, -0.12),
            Complex64::new(1577.62, -0.18),
        ];
        let mut got = last.poles;
        got.sort_by(|a, b| (a.re, -a.im).partial_cmp(&(b.re, -b.im)).unwrap());
        for (g, e) in got.iter().zip(expected) {
            assert!((g - e).norm() < 1e-9, "{got:?}");
        }
    }

    #[test]
    fn matching_follows_nearest_branch() {
        let prev = [
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(2.0, 0.0),
        ];
        let next = [
            Complex64::new(2.1, 0.0),
            Complex64::new(0.1, 0.0),
            Complex64::new(0.9, 0.0),
        ];
        assert_eq!(match_branches(&prev, next), [next[1], next[2], next[0]]);
    }

    #[test]
    fn parameter_names_parse() {
        for name in [
            "delta", "Gamma13", "Gamma23", "gamma1", "gamma2", "gamma3", "Omega",
        ] {
            assert_eq!(name.parse::<SweepParameter>().unwrap().name(), name);
        }
        assert!("omega".parse::<SweepParameter>().is_err());
    }
}
