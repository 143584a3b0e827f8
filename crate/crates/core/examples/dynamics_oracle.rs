//! Cavity amplitude a(t) from the residue sum, checked against exp(Mt).

use hybrid_polariton::model::HBAR_PS_PER_MEV;
use hybrid_polariton::{
    evolve_oracle, mode_decomposition, poles, reconstruct_propagator, ModelParams,
};

fn main() -> hybrid_polariton::Result<()> {
    let params = ModelParams::reference();
    let set = poles(&params);
    let coeffs = mode_decomposition(&params, &set)?;
    let [sa, sw, sf] = coeffs.sums();
    println!("Σc_a = {sa:.3e}, Σc_A = {sw:.3e}, Σc_B = {sf:.3e}");

    println!(
        "{:>6} {:>8} {:>10} {:>10} {:>10} {:>10}",
        "t", "t (ps)", "|a|²", "|A|²", "|B|²", "error"
    );
    for i in 0..=20 {
        let t = i as f64;
        let row = reconstruct_propagator(&coeffs, &set, t);
        let oracle = evolve_oracle(&params, t).cavity_row();
        let err = row
            .iter()
            .zip(oracle)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        println!(
            "{t:>6.1} {:>8.3} {:>10.6} {:>10.6} {:>10.6} {err:>10.1e}",
            t * HBAR_PS_PER_MEV,
            row[0].norm_sqr(),
            row[1].norm_sqr(),
            row[2].norm_sqr()
        );
    }
    Ok(())
}
