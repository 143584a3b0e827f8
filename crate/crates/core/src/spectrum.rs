//! Stationary emission spectrum of the cavity field.
//!
//! For a product of number states only ⟨a⁺(0)a(0)⟩ = n̄_c survives in the
//! correlation, so with the residues c_a[j] of [`mode_decomposition`]
//!
//! ```text
//! ⟨a⁺(t)a(0)⟩ = n̄_c Σ_j w_j e^{iω_j* t},   w_j = conj(c_a[j])
//! ```
//!
//! which decays as e^{−Γ_j t}. The spectrum
//! S(ω) = 2 Re ∫₀^∞ e^{−iωt}⟨a⁺(t)a(0)⟩dt then has three routes:
//!
//! * [`SpectrumMethod::Quadrature`]: the integral itself, done per pole in
//!   closed form, 2n̄_c Re Σ_j w_j/(Γ_j + i(ω − ω′_j)). A brute-force
//!   time-domain quadrature ([`NumericQuadrature`]) checks it.
//! * [`SpectrumMethod::ClosedForm`]: the three-line formula with
//!   ω-dependent numerators in their published form (see [`NumeratorForm`]).
//! * [`SpectrumMethod::LorentzApprox`]: three Lorentzians with numerators
//!   frozen at their line centers.
//!
//! [`mode_decomposition`]: crate::dynamics::mode_decomposition

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::dynamics::{exciton_factor, mode_decomposition, ModeCoefficients};
use crate::error::{Error, Result};
use crate::model::{ModelParams, SpectralGrid};
use crate::pole_solver::PoleSet;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Decay rates at or below this are treated as undamped.
pub const MIN_DECAY_RATE: f64 = 1e-9;
/// Truncation point of the numeric time integral: e^{−Γ_min T} = e^{−this}.
const TAIL_EXPONENT: f64 = 37.0;
const GAUSS_ORDER: usize = 20;
/// Default half-width of the spectrum window in units of the largest Γ_j.
pub const DEFAULT_WINDOW_WIDTHS: f64 = 20.0;
pub const DEFAULT_GRID_POINTS: usize = 4001;
/// Golden-section refinement stops below this bracket width (meV).
pub const PEAK_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumMethod {
    ClosedForm,
    LorentzApprox,
    Quadrature,
}

impl SpectrumMethod {
    pub const ALL: [SpectrumMethod; 3] = [
        SpectrumMethod::ClosedForm,
        SpectrumMethod::LorentzApprox,
        SpectrumMethod::Quadrature,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SpectrumMethod::ClosedForm => "closed_form",
            SpectrumMethod::LorentzApprox => "lorentz",
            SpectrumMethod::Quadrature => "quadrature",
        }
    }
}

impl fmt::Display for SpectrumMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpectrumMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "closed_form" => Ok(SpectrumMethod::ClosedForm),
            "lorentz" | "lorentz_approx" => Ok(SpectrumMethod::LorentzApprox),
            "quadrature" => Ok(SpectrumMethod::Quadrature),
            other => Err(format!("unknown spectrum method: {other}")),
        }
    }
}

/// How the numerator of each Lorentzian line is written.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumeratorForm {
    /// The published pattern, with (ω₁, ω₂, ω₃) in [`PoleSet`] order:
    ///
    /// ```text
    /// A(ω) = 2n̄ Re[E(ω₁)Δ₁Δ₂(ω − ω₁)] / |Δ₁|²|Δ₂|²
    /// B(ω) = 2n̄ Re[E(ω₂)Δ₃Δ₂(ω − ω₂)] / |Δ₃|²|Δ₂|²
    /// C(ω) = 2n̄ Re[E(ω₃)Δ₃Δ₁(ω − ω₃)] / |Δ₃|²|Δ₁|²
    /// ```
    ///
    /// These lines are dispersive rather than absorptive; each maximum sits
    /// about Γ_j above ω′_j.
    AsPrinted,
    /// Numerators of the exact per-pole integral,
    /// 2n̄ Re[−i w_j (ω − ω_j)] with w_j = conj(E(ω_j)/∏_{k≠j}(ω_j − ω_k)).
    Residue,
}

/// Correlation weights w_j = conj(c_a[j]).
pub fn correlation_weights(coeffs: &ModeCoefficients) -> [Complex64; 3] {
    coeffs.cavity.map(|c| c.conj())
}

/// ⟨a⁺(t)a(0)⟩ for the number-state initial condition, t ≥ 0.
pub fn correlation(
    params: &ModelParams,
    poles: &PoleSet,
    coeffs: &ModeCoefficients,
    t: f64,
) -> Complex64 {
    let w = correlation_weights(coeffs);
    params.n_photons
        * (0..3)
            .map(|j| w[j] * (I * poles.get(j).conj() * t).exp())
            .sum::<Complex64>()
}

/// Frequency window [min ω′ − 20 max Γ, max ω′ + 20 max Γ] with 4001 points.
pub fn default_grid(poles: &PoleSet) -> SpectralGrid {
    let pos = poles.positions();
    let width = DEFAULT_WINDOW_WIDTHS * poles.decay_rates().into_iter().fold(0.0, f64::max);
    let lo = pos.iter().copied().fold(f64::INFINITY, f64::min) - width;
    let hi = pos.iter().copied().fold(f64::NEG_INFINITY, f64::max) + width;
    let (lo, hi) = if hi > lo {
        (lo, hi)
    } else {
        (lo - 1.0, hi + 1.0)
    };
    SpectralGrid::new(lo, hi, DEFAULT_GRID_POINTS).expect("window bounds are ordered")
}

/// Sampled spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumCurve {
    pub grid: SpectralGrid,
    pub values: Vec<f64>,
    pub method: SpectrumMethod,
}

impl SpectrumCurve {
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid.points().zip(self.values.iter().copied())
    }

    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Trapezoid integral over the grid.
    pub fn integral(&self) -> f64 {
        let h = self.grid.spacing();
        let inner: f64 = self.values.iter().sum();
        h * (inner - 0.5 * (self.values[0] + self.values[self.values.len() - 1]))
    }
}

/// Everything needed to evaluate the spectrum at arbitrary ω, per method.
#[derive(Debug, Clone)]
pub struct EmissionSpectrum {
    n_photons: f64,
    poles: PoleSet,
    weights: [Complex64; 3],
    /// Published numerators: (E(ω_j)·ΔΔ, |Δ|²|Δ|²).
    printed: [(Complex64, f64); 3],
}

impl EmissionSpectrum {
    pub fn new(params: &ModelParams, poles: &PoleSet) -> Result<Self> {
        let coeffs = mode_decomposition(params, poles)?;
        Ok(Self::from_coefficients(params, poles, &coeffs))
    }

    pub fn from_coefficients(
        params: &ModelParams,
        poles: &PoleSet,
        coeffs: &ModeCoefficients,
    ) -> Self {
        let [d1, d2, d3] = poles.splittings();
        let e = |j: usize| exciton_factor(params, poles.get(j));
        let printed = [
            (e(0) * d1 * d2, d1.norm_sqr() * d2.norm_sqr()),
            (e(1) * d3 * d2, d3.norm_sqr() * d2.norm_sqr()),
            (e(2) * d3 * d1, d3.norm_sqr() * d1.norm_sqr()),
        ];
        EmissionSpectrum {
            n_photons: params.n_photons,
            poles: *poles,
            weights: correlation_weights(coeffs),
            printed,
        }
    }

    pub fn poles(&self) -> &PoleSet {
        &self.poles
    }

    pub fn weights(&self) -> [Complex64; 3] {
        self.weights
    }

    /// Line-j numerator at ω for the given form.
    pub fn numerator(&self, form: NumeratorForm, j: usize, omega: f64) -> f64 {
        let offset = omega - self.poles.get(j);
        match form {
            NumeratorForm::AsPrinted => {
                let (x, denom) = self.printed[j];
                2.0 * self.n_photons * (x * offset).re / denom
            }
            NumeratorForm::Residue => 2.0 * self.n_photons * (-I * self.weights[j] * offset).re,
        }
    }

    fn lorentzian_denominator(&self, j: usize, omega: f64) -> f64 {
        let w = self.poles.get(j);
        (omega - w.re).powi(2) + w.im * w.im
    }

    /// Three-line formula with ω-dependent numerators.
    pub fn closed_form_with(&self, form: NumeratorForm, omega: f64) -> f64 {
        (0..3)
            .map(|j| self.numerator(form, j, omega) / self.lorentzian_denominator(j, omega))
            .sum()
    }

    /// Three-line formula with the published numerators.
    pub fn closed_form(&self, omega: f64) -> f64 {
        self.closed_form_with(NumeratorForm::AsPrinted, omega)
    }

    /// Three Lorentzians, numerator j frozen at ω = ω′_j.
    pub fn lorentz_approx_with(&self, form: NumeratorForm, omega: f64) -> f64 {
        (0..3)
            .map(|j| {
                let height = self.numerator(form, j, self.poles.get(j).re);
                height / self.lorentzian_denominator(j, omega)
            })
            .sum()
    }

    /// Three Lorentzians with the residue numerators frozen at their centers.
    pub fn lorentz_approx(&self, omega: f64) -> f64 {
        self.lorentz_approx_with(NumeratorForm::Residue, omega)
    }

    /// Exact value of the correlation integral, summed pole by pole.
    pub fn quadrature(&self, omega: f64) -> f64 {
        let sum: Complex64 = (0..3)
            .map(|j| {
                let w = self.poles.get(j);
                self.weights[j] / Complex64::new(-w.im, omega - w.re)
            })
            .sum();
        2.0 * self.n_photons * sum.re
    }

    pub fn evaluate(&self, method: SpectrumMethod, omega: f64) -> f64 {
        match method {
            SpectrumMethod::ClosedForm => self.closed_form(omega),
            SpectrumMethod::LorentzApprox => self.lorentz_approx(omega),
            SpectrumMethod::Quadrature => self.quadrature(omega),
        }
    }

    /// Fails with [`Error::Undamped`] unless every pole decays.
    pub fn require_damped(&self) -> Result<()> {
        let min = self
            .poles
            .decay_rates()
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min > MIN_DECAY_RATE {
            Ok(())
        } else {
            Err(Error::Undamped)
        }
    }

    /// Samples one method over a grid.
    pub fn curve(&self, method: SpectrumMethod, grid: &SpectralGrid) -> Result<SpectrumCurve> {
        if method == SpectrumMethod::Quadrature {
            self.require_damped()?;
        }
        Ok(SpectrumCurve {
            grid: *grid,
            values: grid.points().map(|w| self.evaluate(method, w)).collect(),
            method,
        })
    }
}

/// Spectrum from the correlation integral (per-pole closed-form antiderivative).
pub fn spectrum_quadrature(
    params: &ModelParams,
    poles: &PoleSet,
    coeffs: &ModeCoefficients,
    grid: &SpectralGrid,
) -> Result<SpectrumCurve> {
    EmissionSpectrum::from_coefficients(params, poles, coeffs)
        .curve(SpectrumMethod::Quadrature, grid)
}

/// Spectrum from the three-line formula with published numerators.
pub fn spectrum_closed_form(
    params: &ModelParams,
    poles: &PoleSet,
    grid: &SpectralGrid,
) -> Result<SpectrumCurve> {
    EmissionSpectrum::new(params, poles)?.curve(SpectrumMethod::ClosedForm, grid)
}

/// Spectrum as a sum of three fixed-height Lorentzians.
pub fn spectrum_lorentz_approx(
    params: &ModelParams,
    poles: &PoleSet,
    coeffs: &ModeCoefficients,
    grid: &SpectralGrid,
) -> Result<SpectrumCurve> {
    mode_decomposition(params, poles)?;
    EmissionSpectrum::from_coefficients(params, poles, coeffs)
        .curve(SpectrumMethod::LorentzApprox, grid)
}

/// Brute-force evaluation of 2 Re ∫₀^T e^{−iωt}⟨a⁺(t)a(0)⟩dt.
///
/// Composite Gauss-Legendre in t: 20-node panels, each at most half an
/// oscillation period at the largest detuning the grid reaches (so ≥ 40 nodes
/// per period) and at most 1/Γ_max long. T is set by e^{−Γ_min T} = e^{−37}.
/// The correlation is sampled once and reused for every ω.
#[derive(Debug, Clone)]
pub struct NumericQuadrature {
    reference: f64,
    times: Vec<f64>,
    /// Quadrature weight × correlation × e^{−i·reference·t}.
    samples: Vec<Complex64>,
}

impl NumericQuadrature {
    pub fn new(
        params: &ModelParams,
        poles: &PoleSet,
        coeffs: &ModeCoefficients,
        grid: &SpectralGrid,
    ) -> Result<Self> {
        let rates = poles.decay_rates();
        let gamma_min = rates.into_iter().fold(f64::INFINITY, f64::min);
        let gamma_max = rates.into_iter().fold(0.0, f64::max);
        if gamma_min <= MIN_DECAY_RATE {
            return Err(Error::Undamped);
        }
        let horizon = TAIL_EXPONENT / gamma_min;
        let max_detuning = poles
            .positions()
            .iter()
            .flat_map(|&x| [(grid.omega_min() - x).abs(), (grid.omega_max() - x).abs()])
            .fold(0.0, f64::max);
        let panel = (PI / max_detuning.max(1e-12)).min(1.0 / gamma_max);
        let n_panels = (horizon / panel).ceil() as usize;
        let panel = horizon / n_panels as f64;

        let (nodes, weights) = gauss_legendre(GAUSS_ORDER);
        let reference = 0.5 * (grid.omega_min() + grid.omega_max());
        let mut times = Vec::with_capacity(n_panels * GAUSS_ORDER);
        let mut samples = Vec::with_capacity(n_panels * GAUSS_ORDER);
        for p in 0..n_panels {
            let mid = (p as f64 + 0.5) * panel;
            for (x, wt) in nodes.iter().zip(&weights) {
                let t = mid + 0.5 * panel * x;
                let corr = correlation(params, poles, coeffs, t);
                times.push(t);
                samples.push(0.5 * panel * wt * corr * (-I * reference * t).exp());
            }
        }
        Ok(NumericQuadrature {
            reference,
            times,
            samples,
        })
    }

    pub fn node_count(&self) -> usize {
        self.times.len()
    }

    pub fn value(&self, omega: f64) -> f64 {
        let dw = omega - self.reference;
        let sum: Complex64 = self
            .times
            .iter()
            .zip(&self.samples)
            .map(|(&t, &s)| s * (-I * dw * t).exp())
            .sum();
        2.0 * sum.re
    }

    pub fn curve(&self, grid: &SpectralGrid) -> SpectrumCurve {
        SpectrumCurve {
            grid: *grid,
            values: grid.points().map(|w| self.value(w)).collect(),
            method: SpectrumMethod::Quadrature,
        }
    }
}

/// Spectrum by direct numerical integration of the correlation function.
pub fn spectrum_quadrature_numeric(
    params: &ModelParams,
    poles: &PoleSet,
    coeffs: &ModeCoefficients,
    grid: &SpectralGrid,
) -> Result<SpectrumCurve> {
    Ok(NumericQuadrature::new(params, poles, coeffs, grid)?.curve(grid))
}

/// Gauss-Legendre nodes and weights on [−1, 1].
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut deriv = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            deriv = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / deriv;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Peak {
    pub omega: f64,
    pub height: f64,
}

/// Refined local maxima, ascending in ω.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PeakSet {
    pub peaks: Vec<Peak>,
}

impl PeakSet {
    pub fn len(&self) -> usize {
        self.peaks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.peaks.is_empty()
    }

    pub fn positions(&self) -> Vec<f64> {
        self.peaks.iter().map(|p| p.omega).collect()
    }

    /// Differences between consecutive peak positions.
    pub fn splittings(&self) -> Vec<f64> {
        self.peaks
            .windows(2)
            .map(|w| w[1].omega - w[0].omega)
            .collect()
    }
}

/// Locates the maxima of `f` on `grid`.
///
/// Scans for a + → − sign change of the central difference, then refines the
/// bracketed maximum by golden-section search. An empty set means the grid
/// holds no interior maximum.
pub fn find_peaks<F: Fn(f64) -> f64>(f: F, grid: &SpectralGrid) -> PeakSet {
    let xs: Vec<f64> = grid.points().collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let n = xs.len();
    let mut peaks: Vec<Peak> = Vec::new();
    if n < 4 {
        return PeakSet { peaks };
    }
    // Central differences inside, one-sided at the two ends.
    let d: Vec<f64> = (0..n)
        .map(|i| ys[(i + 1).min(n - 1)] - ys[i.saturating_sub(1)])
        .collect();
    let mut i = 0;
    while i + 1 < n {
        if d[i] > 0.0 && d[i + 1] <= 0.0 {
            // Skip a flat run to find where the slope turns negative.
            let mut k = i + 1;
            while k < n && d[k] == 0.0 {
                k += 1;
            }
            if k < n && d[k] < 0.0 {
                let (lo, hi) = (xs[i.saturating_sub(1)], xs[(k + 1).min(n - 1)]);
                let omega = golden_section_max(&f, lo, hi);
                let height = f(omega);
                let interior = omega > xs[0] && omega < xs[n - 1];
                let distinct = peaks
                    .last()
                    .is_none_or(|p| omega - p.omega > PEAK_TOLERANCE);
                if interior && distinct && height >= f(lo) && height >= f(hi) {
                    peaks.push(Peak { omega, height });
                }
            }
            i = k;
        } else {
            i += 1;
        }
    }
    PeakSet { peaks }
}

fn golden_section_max<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > PEAK_TOLERANCE {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}
