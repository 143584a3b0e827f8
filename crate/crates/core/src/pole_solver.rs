//! Complex eigenfrequencies of the damped three-mode system.
//!
//! The pole polynomial
//!
//! ```text
//! (ω − Ω + iγ₁)(ω − ω_W + iγ₂)(ω − ω_F + iγ₃) − (ω − ω_W + iγ₂)Γ₂₃² − (ω − ω_F + iγ₃)Γ₁₃² = 0
//! ```
//!
//! is a monic cubic. Its roots sit at ~10³ meV while their separations are a
//! few meV, so expanding around ω = 0 would cancel away most of the
//! significant digits. [`CubicCoefficients`] therefore keeps the cubic in a
//! local variable z = ω − origin and the solvers work in that frame.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::ModelParams;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Real parts closer than this are treated as tied when sorting poles.
pub const SORT_TIE_TOLERANCE: f64 = 1e-9;
/// Relative step size at which the simultaneous iteration stops.
pub const ITERATION_TOLERANCE: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 500;

/// Monic cubic P(ω) = ω³ + c₂ω² + c₁ω + c₀, stored as
/// P(origin + z) = z³ + b₂z² + b₁z + b₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicCoefficients {
    origin: f64,
    local: [Complex64; 3],
}

impl CubicCoefficients {
    /// Cubic given by its coefficients around ω = 0.
    pub fn monic(c2: Complex64, c1: Complex64, c0: Complex64) -> Self {
        Self::shifted(0.0, c2, c1, c0)
    }

    /// Cubic given by its coefficients in z = ω − origin.
    pub fn shifted(origin: f64, b2: Complex64, b1: Complex64, b0: Complex64) -> Self {
        CubicCoefficients {
            origin,
            local: [b2, b1, b0],
        }
    }

    pub fn origin(&self) -> f64 {
        self.origin
    }

    /// (b₂, b₁, b₀) in the local variable.
    pub fn local(&self) -> [Complex64; 3] {
        self.local
    }

    pub fn c2(&self) -> Complex64 {
        self.local[0] - 3.0 * self.origin
    }

    pub fn c1(&self) -> Complex64 {
        let o = self.origin;
        let [b2, b1, _] = self.local;
        3.0 * o * o - 2.0 * b2 * o + b1
    }

    pub fn c0(&self) -> Complex64 {
        let o = self.origin;
        let [b2, b1, b0] = self.local;
        -o * o * o + b2 * o * o - b1 * o + b0
    }

    /// P at a local coordinate z.
    pub fn eval_local(&self, z: Complex64) -> Complex64 {
        let [b2, b1, b0] = self.local;
        ((z + b2) * z + b1) * z + b0
    }

    /// P at an absolute frequency ω.
    pub fn eval(&self, omega: Complex64) -> Complex64 {
        self.eval_local(omega - self.origin)
    }

    /// Rounding-error floor of [`eval_local`](Self::eval_local) at z.
    fn eval_noise(&self, z: Complex64) -> f64 {
        let r = z.norm();
        let [b2, b1, b0] = self.local;
        let sum = r.powi(3) + b2.norm() * r * r + b1.norm() * r + b0.norm();
        8.0 * f64::EPSILON * sum
    }

    /// Coefficient magnitude scale used for residual tolerances.
    pub fn residual_scale(&self) -> f64 {
        self.c0().norm().max(1.0)
    }
}

/// Builds the pole cubic by symbolic expansion around the mean bare frequency.
pub fn build_pole_cubic(params: &ModelParams) -> CubicCoefficients {
    let origin = params.bare_frequencies().iter().sum::<f64>() / 3.0;
    let [dc, dw, df] = local_bare_poles(params, origin);
    let g13 = Complex64::from(params.coupling_w * params.coupling_w);
    let g23 = Complex64::from(params.coupling_f * params.coupling_f);
    // (z − dc)(z − dw)(z − df) − (z − dw)Γ₂₃² − (z − df)Γ₁₃²
    let b2 = -(dc + dw + df);
    let b1 = dc * dw + dc * df + dw * df - g13 - g23;
    let b0 = -dc * dw * df + dw * g23 + df * g13;
    CubicCoefficients::shifted(origin, b2, b1, b0)
}

/// Bare damped mode frequencies x_k − iγ_k relative to `origin`, in the
/// order (cavity, Wannier, Frenkel).
fn local_bare_poles(params: &ModelParams, origin: f64) -> [Complex64; 3] {
    let f = params.bare_frequencies();
    let g = params.dampings();
    [0, 1, 2].map(|k| Complex64::new(f[k] - origin, -g[k]))
}

/// Three complex eigenfrequencies ω_j = ω′_j − iΓ_j, sorted by real part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleSet {
    poles: [Complex64; 3],
}

impl PoleSet {
    /// Sorts the given roots into canonical order: ascending real part, ties
    /// (within [`SORT_TIE_TOLERANCE`]) broken by ascending decay rate.
    pub fn new(mut poles: [Complex64; 3]) -> Self {
        poles.sort_by(compare_poles);
        PoleSet { poles }
    }

    /// Keeps the given order. Used when a caller tracks branches itself.
    pub fn unsorted(poles: [Complex64; 3]) -> Self {
        PoleSet { poles }
    }

    pub fn poles(&self) -> [Complex64; 3] {
        self.poles
    }

    pub fn get(&self, j: usize) -> Complex64 {
        self.poles[j]
    }

    /// Line positions ω′_j.
    pub fn positions(&self) -> [f64; 3] {
        self.poles.map(|w| w.re)
    }

    /// Decay rates Γ_j = −Im ω_j.
    pub fn decay_rates(&self) -> [f64; 3] {
        self.poles.map(|w| -w.im)
    }

    /// (Δ₁, Δ₂, Δ₃) = (ω₁ − ω₂, ω₁ − ω₃, ω₂ − ω₃).
    pub fn splittings(&self) -> [Complex64; 3] {
        let [w1, w2, w3] = self.poles;
        [w1 - w2, w1 - w3, w2 - w3]
    }

    /// ∏_{k≠j} (ω_j − ω_k).
    pub fn residue_denominator(&self, j: usize) -> Complex64 {
        (0..3)
            .filter(|&k| k != j)
            .map(|k| self.poles[j] - self.poles[k])
            .product()
    }

    pub fn min_separation(&self) -> f64 {
        let [d1, d2, d3] = self.splittings();
        d1.norm().min(d2.norm()).min(d3.norm())
    }

    pub fn iter(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.poles.iter().copied()
    }
}

fn compare_poles(a: &Complex64, b: &Complex64) -> Ordering {
    if (a.re - b.re).abs() <= SORT_TIE_TOLERANCE {
        (-a.im).total_cmp(&-b.im)
    } else {
        a.re.total_cmp(&b.re)
    }
}

/// Closed-form roots by Cardano's method in complex arithmetic.
///
/// The cubic is depressed, the principal cube root taken once, and the other
/// two roots generated with the unit cube roots.
pub fn solve_cubic_analytic(coeffs: &CubicCoefficients) -> PoleSet {
    let [b2, b1, b0] = coeffs.local();
    let shift = b2 / 3.0;
    // y³ + p y + q with z = y − b₂/3
    let p = b1 - b2 * shift;
    let q = b0 - b1 * shift + 2.0 * shift * shift * shift;

    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let sqrt_disc = disc.sqrt();
    // Pick the sign that avoids cancellation in −q/2 ± √disc.
    let plus = -q / 2.0 + sqrt_disc;
    let minus = -q / 2.0 - sqrt_disc;
    let u3 = if plus.norm() >= minus.norm() {
        plus
    } else {
        minus
    };

    let unit = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let roots = if u3.norm() == 0.0 {
        // p = q = 0: triple root.
        [Complex64::new(0.0, 0.0); 3]
    } else {
        let u = u3.cbrt();
        let v = -p / (3.0 * u);
        let mut ys = [Complex64::new(0.0, 0.0); 3];
        let mut rot = Complex64::new(1.0, 0.0);
        for y in ys.iter_mut() {
            *y = u * rot + v * rot.conj();
            rot *= unit;
        }
        ys
    };
    PoleSet::new(roots.map(|y| coeffs.origin() + (y - shift)))
}

/// Roots by Durand-Kerner (Weierstrass) simultaneous iteration.
///
/// Starts from three points on a circle of radius 1 + max|b_k| in the local
/// frame. Stops when every update is below [`ITERATION_TOLERANCE`] relative to
/// the iterate, or once every residual has reached the rounding floor of the
/// polynomial evaluation (updates there are noise).
pub fn solve_cubic_numeric(coeffs: &CubicCoefficients) -> Result<PoleSet> {
    let radius = 1.0 + coeffs.local().iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: [Complex64; 3] =
        [0, 1, 2].map(|k| Complex64::from_polar(radius, 0.4 + 2.0 * PI * k as f64 / 3.0));

    let mut best = z;
    let mut best_residual = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0_f64;
        for k in 0..3 {
            let denom: Complex64 = (0..3).filter(|&j| j != k).map(|j| z[k] - z[j]).product();
            if denom.norm() == 0.0 {
                // Coincident iterates: nudge apart and continue.
                z[k] += Complex64::new(radius * 1e-8, radius * 1e-8);
                max_step = f64::INFINITY;
                continue;
            }
            let step = coeffs.eval_local(z[k]) / denom;
            z[k] -= step;
            let relative = step.norm() / z[k].norm().max(1.0);
            max_step = if relative.is_nan() {
                f64::INFINITY
            } else {
                max_step.max(relative)
            };
        }
        let residual = z
            .iter()
            .map(|&r| coeffs.eval_local(r).norm())
            .fold(0.0, f64::max);
        if residual < best_residual {
            best_residual = residual;
            best = z;
        }
        let at_noise_floor = z
            .iter()
            .all(|&r| coeffs.eval_local(r).norm() <= coeffs.eval_noise(r));
        if max_step < ITERATION_TOLERANCE || at_noise_floor {
            return Ok(PoleSet::new(z.map(|r| coeffs.origin() + r)));
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        best: best.map(|r| coeffs.origin() + r),
        residual: best_residual,
    })
}

/// Left-hand side of the pole equation evaluated directly from the model,
/// without expanding the product.
pub fn pole_equation_lhs(params: &ModelParams, omega: Complex64) -> Complex64 {
    let cav = I * params.gamma_c + omega - params.omega_c;
    let wan = I * params.gamma_w + omega - params.omega_w;
    let fre = I * params.gamma_f + omega - params.omega_f;
    cav * wan * fre
        - wan * params.coupling_f * params.coupling_f
        - fre * params.coupling_w * params.coupling_w
}

/// Builds the cubic and solves it in closed form.
pub fn poles(params: &ModelParams) -> PoleSet {
    solve_cubic_analytic(&build_pole_cubic(params))
}
