//! Spectral peaks and their splittings for each spectrum method.

use hybrid_polariton::spectrum::NumeratorForm;
use hybrid_polariton::{
    find_peaks, poles, EmissionSpectrum, ModelParams, SpectralGrid, SpectrumMethod,
};

fn main() -> hybrid_polariton::Result<()> {
    let params = ModelParams::reference();
    let set = poles(&params);
    let spectrum = EmissionSpectrum::new(&params, &set)?;
    let grid = SpectralGrid::new(1540.0, 1600.0, 6001)?;

    println!("pole positions: {:.4?}", set.positions());
    for method in SpectrumMethod::ALL {
        let peaks = find_peaks(|w| spectrum.evaluate(method, w), &grid);
        println!("{:<12} peaks {:.4?}", method.as_str(), peaks.positions());
        println!("{:<12} splittings {:.4?}", "", peaks.splittings());
    }
    let residue = find_peaks(
        |w| spectrum.closed_form_with(NumeratorForm::Residue, w),
        &grid,
    );
    println!("{:<12} peaks {:.4?}", "residue", residue.positions());
    Ok(())
}
