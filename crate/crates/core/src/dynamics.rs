//! Time evolution of the cavity operator.
//!
//! With A = (a, A, B) the equations of motion are dA/dt = M·A where
//!
//! ```text
//!     ⎡ −iΩ − γ₁   −iΓ₁₃      −iΓ₂₃    ⎤
//! M = ⎢ −iΓ₁₃      −iω_W − γ₂  0        ⎥
//!     ⎣ −iΓ₂₃      0           −iω_F − γ₃⎦
//! ```
//!
//! [`mode_decomposition`] expresses the first row of exp(Mt) as a sum of
//! damped exponentials through the residues at the poles. [`evolve_oracle`]
//! computes exp(Mt) directly and shares no code with the pole path.

use nalgebra::Matrix3;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::pole_solver::PoleSet;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Poles closer than this cannot be used as simple residues.
pub const MIN_POLE_SEPARATION: f64 = 1e-6;

/// Per-pole weights of a(t) on the initial operators:
/// a(t) = Σ_j e^{−iω_j t} (c_a[j]·a(0) + c_A[j]·A(0) + c_B[j]·B(0)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeCoefficients {
    pub cavity: [Complex64; 3],
    pub wannier: [Complex64; 3],
    pub frenkel: [Complex64; 3],
}

impl ModeCoefficients {
    /// Row j of the table: the weights of pole j on (a(0), A(0), B(0)).
    pub fn pole(&self, j: usize) -> [Complex64; 3] {
        [self.cavity[j], self.wannier[j], self.frenkel[j]]
    }

    /// (Σc_a, Σc_A, Σc_B); equals (1, 0, 0) for any consistent set.
    pub fn sums(&self) -> [Complex64; 3] {
        [
            self.cavity.iter().sum(),
            self.wannier.iter().sum(),
            self.frenkel.iter().sum(),
        ]
    }
}

/// E(ω) = (iγ₂ + ω − ω_W)(iγ₃ + ω − ω_F).
pub fn exciton_factor(params: &ModelParams, omega: Complex64) -> Complex64 {
    (I * params.gamma_w + omega - params.omega_w) * (I * params.gamma_f + omega - params.omega_f)
}

/// Residues of the Fourier-domain cavity amplitude at each pole.
///
/// c_a[j] = E(ω_j)/P_j, c_A[j] = Γ₁₃(iγ₃ + ω_j − ω_F)/P_j and
/// c_B[j] = Γ₂₃(iγ₂ + ω_j − ω_W)/P_j with P_j = ∏_{k≠j}(ω_j − ω_k).
pub fn mode_decomposition(params: &ModelParams, poles: &PoleSet) -> Result<ModeCoefficients> {
    let separation = poles.min_separation();
    if separation <= MIN_POLE_SEPARATION {
        return Err(Error::DegeneratePoles { separation });
    }
    let mut out = ModeCoefficients {
        cavity: [Complex64::default(); 3],
        wannier: [Complex64::default(); 3],
        frenkel: [Complex64::default(); 3],
    };
    for j in 0..3 {
        let w = poles.get(j);
        let denom = poles.residue_denominator(j);
        out.cavity[j] = exciton_factor(params, w) / denom;
        out.wannier[j] = params.coupling_w * (I * params.gamma_f + w - params.omega_f) / denom;
        out.frenkel[j] = params.coupling_f * (I * params.gamma_w + w - params.omega_w) / denom;
    }
    Ok(out)
}

/// The a-row of the propagator rebuilt from the residues:
/// (Σ_j c_a[j]e^{−iω_j t}, Σ_j c_A[j]e^{−iω_j t}, Σ_j c_B[j]e^{−iω_j t}).
pub fn reconstruct_propagator(
    coeffs: &ModeCoefficients,
    poles: &PoleSet,
    t: f64,
) -> [Complex64; 3] {
    let mut row = [Complex64::default(); 3];
    for j in 0..3 {
        let phase = (-I * poles.get(j) * t).exp();
        for (slot, c) in row.iter_mut().zip(coeffs.pole(j)) {
            *slot += c * phase;
        }
    }
    row
}

/// U(t) mapping (a(0), A(0), B(0)) to (a(t), A(t), B(t)).
#[derive(Debug, Clone, PartialEq)]
pub struct Propagator {
    pub t: f64,
    pub matrix: Matrix3<Complex64>,
}

impl Propagator {
    pub fn cavity_row(&self) -> [Complex64; 3] {
        [
            self.matrix[(0, 0)],
            self.matrix[(0, 1)],
            self.matrix[(0, 2)],
        ]
    }

    pub fn singular_values(&self) -> [f64; 3] {
        let sv = self.matrix.singular_values();
        [sv[0], sv[1], sv[2]]
    }
}

/// The generator M of the equations of motion.
pub fn generator(params: &ModelParams) -> Matrix3<Complex64> {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    Matrix3::new(
        c(-params.gamma_c, -params.omega_c),
        c(0.0, -params.coupling_w),
        c(0.0, -params.coupling_f),
        c(0.0, -params.coupling_w),
        c(-params.gamma_w, -params.omega_w),
        c(0.0, 0.0),
        c(0.0, -params.coupling_f),
        c(0.0, 0.0),
        c(-params.gamma_f, -params.omega_f),
    )
}

/// exp(Mt) by scaling and squaring a truncated Taylor series.
///
/// The mean bare frequency is factored out first as a scalar phase, since it
/// commutes with M and would otherwise dominate the norm.
pub fn evolve_oracle(params: &ModelParams, t: f64) -> Propagator {
    assert!(t >= 0.0, "evolve_oracle needs t >= 0, got {t}");
    let mean = params.bare_frequencies().iter().sum::<f64>() / 3.0;
    let shifted = generator(params) + Matrix3::from_diagonal_element(I * mean);
    let phase = (-I * mean * t).exp();
    Propagator {
        t,
        matrix: expm(&(shifted * Complex64::from(t))) * phase,
    }
}

fn norm_1(m: &Matrix3<Complex64>) -> f64 {
    (0..3)
        .map(|j| (0..3).map(|i| m[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

fn expm(a: &Matrix3<Complex64>) -> Matrix3<Complex64> {
    let norm = norm_1(a);
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = a / Complex64::from(2f64.powi(squarings));
    // ‖scaled‖ ≤ 1/2, so 20 terms reach double precision.
    let mut term = Matrix3::<Complex64>::identity();
    let mut sum = term;
    for k in 1..=20 {
        term = term * scaled / Complex64::from(k as f64);
        sum += term;
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum
}

/// exp(Mt) by fixed-step classical Runge-Kutta, for near-degenerate inputs
/// where the residue form is unusable. `max_step` bounds the step size.
/// Integrates in the frame rotating at the mean bare frequency.
pub fn evolve_rk4(params: &ModelParams, t: f64, max_step: f64) -> Propagator {
    assert!(t >= 0.0 && max_step > 0.0);
    let mean = params.bare_frequencies().iter().sum::<f64>() / 3.0;
    let m = generator(params) + Matrix3::from_diagonal_element(I * mean);
    let steps = (t / max_step).ceil().max(1.0) as usize;
    let h = Complex64::from(t / steps as f64);
    let mut u = Matrix3::<Complex64>::identity();
    for _ in 0..steps {
        let k1 = m * u;
        let k2 = m * (u + k1 * (h / 2.0));
        let k3 = m * (u + k2 * (h / 2.0));
        let k4 = m * (u + k3 * h);
        let two = Complex64::from(2.0);
        u += (k1 + k2 * two + k3 * two + k4) * (h / 6.0);
    }
    Propagator {
        t,
        matrix: u * (-I * mean * t).exp(),
    }
}
