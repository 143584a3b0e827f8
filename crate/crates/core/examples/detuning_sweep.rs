//! Avoided crossing as the Wannier exciton is tuned through the cavity.

use hybrid_polariton::{run_sweep, ModelParams, SweepParameter, SweepSpec};

fn main() -> hybrid_polariton::Result<()> {
    let spec = SweepSpec {
        parameter: SweepParameter::Delta,
        start: -0.02,
        stop: 0.02,
        n_steps: 41,
        base: ModelParams::reference(),
    };
    let result = run_sweep(&spec)?;
    println!(
        "{:>8} {:>10} {:>11} {:>11} {:>11} {:>6}",
        "delta", "ω_W", "branch 1", "branch 2", "branch 3", "peaks"
    );
    for row in &result.rows {
        let p = spec.parameter.apply(&spec.base, row.value);
        println!(
            "{:>8.4} {:>10.3} {:>11.4} {:>11.4} {:>11.4} {:>6}",
            row.value,
            p.omega_w,
            row.poles[0].re,
            row.poles[1].re,
            row.poles[2].re,
            row.peaks.len()
        );
    }
    Ok(())
}
