#![allow(dead_code)]

use hybrid_polariton::ModelParams;
use rand::Rng;

/// Draw from the ranges used throughout the property tests: frequencies in
/// [1, 5000], couplings in [0, 50], dampings in [0, 5] (all meV).
pub fn random_params(rng: &mut impl Rng) -> ModelParams {
    ModelParams {
        omega_w: rng.gen_range(1.0..5000.0),
        omega_f: rng.gen_range(1.0..5000.0),
        omega_c: rng.gen_range(1.0..5000.0),
        coupling_w: rng.gen_range(0.0..50.0),
        coupling_f: rng.gen_range(0.0..50.0),
        gamma_c: rng.gen_range(0.0..5.0),
        gamma_w: rng.gen_range(0.0..5.0),
        gamma_f: rng.gen_range(0.0..5.0),
        n_photons: 1.0,
    }
}

/// Parameters clustered around a common frequency so the modes actually mix.
pub fn random_mixing_params(rng: &mut impl Rng) -> ModelParams {
    let base = rng.gen_range(1000.0..2000.0);
    ModelParams {
        omega_w: base + rng.gen_range(-10.0..10.0),
        omega_f: base + rng.gen_range(-10.0..10.0),
        omega_c: base,
        coupling_w: rng.gen_range(0.5..6.0),
        coupling_f: rng.gen_range(0.5..6.0),
        gamma_c: rng.gen_range(0.05..0.5),
        gamma_w: rng.gen_range(0.05..0.5),
        gamma_f: rng.gen_range(0.05..0.5),
        n_photons: rng.gen_range(0.5..3.0),
    }
}
