//! One exciton resonant with the cavity: a doublet split by twice the coupling.

use hybrid_polariton::spectrum::default_grid;
use hybrid_polariton::{find_peaks, poles, EmissionSpectrum, ModelParams};

fn main() -> hybrid_polariton::Result<()> {
    for coupling in [0.5, 1.0, 2.0, 8.0_f64.sqrt(), 4.0] {
        let params = ModelParams {
            omega_w: 1562.0,
            coupling_w: coupling,
            coupling_f: 0.0,
            gamma_c: 1e-4,
            gamma_w: 1e-4,
            gamma_f: 1e-4,
            ..ModelParams::reference()
        };
        let set = poles(&params);
        let spectrum = EmissionSpectrum::new(&params, &set)?;
        let peaks = find_peaks(|w| spectrum.quadrature(w), &default_grid(&set));
        let top = peaks.peaks.iter().map(|p| p.height).fold(0.0, f64::max);
        let bright: Vec<f64> = peaks
            .peaks
            .iter()
            .filter(|p| p.height > 0.01 * top)
            .map(|p| p.omega)
            .collect();
        let split = bright
            .last()
            .zip(bright.first())
            .map(|(b, a)| b - a)
            .unwrap_or(0.0);
        println!(
            "Γ13 = {coupling:.4} meV  splitting {split:.4} meV  (2Γ13 = {:.4})",
            2.0 * coupling
        );
    }
    Ok(())
}
