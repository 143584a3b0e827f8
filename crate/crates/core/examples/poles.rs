//! Polariton eigenfrequencies for the reference parameters, from both solvers.

use hybrid_polariton::{build_pole_cubic, solve_cubic_analytic, solve_cubic_numeric, ModelParams};

fn main() -> hybrid_polariton::Result<()> {
    let params = ModelParams::reference();
    let cubic = build_pole_cubic(&params);
    let analytic = solve_cubic_analytic(&cubic);
    let numeric = solve_cubic_numeric(&cubic)?;

    println!("bare modes (meV): {:?}", params.bare_frequencies());
    println!(
        "{:>3} {:>18} {:>14} {:>12}",
        "j", "Re ω_j", "−Im ω_j", "|Δ solvers|"
    );
    for (j, (a, n)) in analytic.iter().zip(numeric.iter()).enumerate() {
        println!(
            "{:>3} {:>18.10} {:>14.10} {:>12.1e}",
            j + 1,
            a.re,
            -a.im,
            (a - n).norm()
        );
    }
    let [d1, d2, d3] = analytic.splittings();
    println!(
        "splittings ω1−ω2, ω1−ω3, ω2−ω3: {:.4}, {:.4}, {:.4} meV",
        d1.re, d2.re, d3.re
    );
    Ok(())
}
