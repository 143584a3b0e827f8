//! Emission spectrum by all three methods, written as CSV.
//!
//! `cargo run --example emission_spectrum [config] > spectrum.csv`

use hybrid_polariton::csv::spectrum_csv;
use hybrid_polariton::spectrum::default_grid;
use hybrid_polariton::{params_from_config, poles, EmissionSpectrum, ModelParams, SpectrumMethod};

fn main() -> hybrid_polariton::Result<()> {
    let params = match std::env::args().nth(1) {
        Some(path) => params_from_config(path)?,
        None => ModelParams::reference(),
    };
    let set = poles(&params);
    let spectrum = EmissionSpectrum::new(&params, &set)?;
    let grid = default_grid(&set);
    let mut columns = Vec::new();
    for method in SpectrumMethod::ALL {
        let curve = spectrum.curve(method, &grid)?;
        eprintln!(
            "{:<12} max {:>9.4}  area/2π {:.4}",
            method.as_str(),
            curve.max_value(),
            curve.integral() / std::f64::consts::TAU
        );
        columns.push((method, curve.values));
    }
    print!("{}", spectrum_csv(&grid, &columns));
    Ok(())
}
