//! Brute-force time integration of the correlation against the per-pole formula.

use hybrid_polariton::spectrum::{correlation, NumericQuadrature};
use hybrid_polariton::{mode_decomposition, poles, EmissionSpectrum, ModelParams, SpectralGrid};

fn main() -> hybrid_polariton::Result<()> {
    let params = ModelParams::reference();
    let set = poles(&params);
    let coeffs = mode_decomposition(&params, &set)?;
    for t in [0.0, 1.0, 5.0, 20.0] {
        let g = correlation(&params, &set, &coeffs, t);
        println!("⟨a⁺({t})a(0)⟩ = {:.6} {:+.6}i", g.re, g.im);
    }

    let grid = SpectralGrid::new(1555.0, 1580.0, 26)?;
    let numeric = NumericQuadrature::new(&params, &set, &coeffs, &grid)?;
    let exact = EmissionSpectrum::from_coefficients(&params, &set, &coeffs);
    println!("{} time nodes", numeric.node_count());
    for w in grid.points() {
        let (n, e) = (numeric.value(w), exact.quadrature(w));
        println!("{w:>8.1} {n:>14.8} {e:>14.8} {:>9.1e}", (n - e).abs() / e);
    }
    Ok(())
}
