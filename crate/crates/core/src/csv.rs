//! CSV output shared by the command-line tool.
//!
//! Numbers are written with 12 significant digits in the style of C's
//! `%.12g`, independent of locale.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::model::{SpectralGrid, HBAR_PS_PER_MEV};
use crate::pole_solver::PoleSet;
use crate::spectrum::{PeakSet, SpectrumMethod};
use crate::sweep::SweepResult;

const SIGNIFICANT_DIGITS: usize = 12;

/// Formats `x` with 12 significant digits, trailing zeros trimmed.
pub fn format_number(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= SIGNIFICANT_DIGITS as i32 {
        format!("{}e{exp}", trim_zeros(mantissa))
    } else {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn row<I: IntoIterator<Item = String>>(out: &mut String, fields: I) {
    let fields: Vec<String> = fields.into_iter().collect();
    let _ = writeln!(out, "{}", fields.join(","));
}

pub fn poles_csv(poles: &PoleSet) -> String {
    let mut out = String::from("re_omega,im_omega\n");
    for w in poles.iter() {
        row(&mut out, [format_number(w.re), format_number(w.im)]);
    }
    out
}

/// `omega_meV` followed by one `S_<method>` column per curve.
pub fn spectrum_csv(grid: &SpectralGrid, columns: &[(SpectrumMethod, Vec<f64>)]) -> String {
    let mut out = String::from("omega_meV");
    for (method, _) in columns {
        out.push_str(",S_");
        out.push_str(method.as_str());
    }
    out.push('\n');
    for (i, omega) in grid.points().enumerate() {
        row(
            &mut out,
            std::iter::once(format_number(omega))
                .chain(columns.iter().map(|(_, v)| format_number(v[i]))),
        );
    }
    out
}

pub fn peaks_csv(sets: &[(SpectrumMethod, PeakSet)]) -> String {
    let mut out = String::from("omega_peak_meV,height,method\n");
    for (method, set) in sets {
        for p in &set.peaks {
            row(
                &mut out,
                [
                    format_number(p.omega),
                    format_number(p.height),
                    method.as_str().to_string(),
                ],
            );
        }
    }
    out
}

/// Header of the `sweep` table; peak columns are blank when absent.
pub const SWEEP_HEADER: &str = "swept_value,re_w1,im_w1,re_w2,im_w2,re_w3,im_w3,peak1,peak2,peak3";

pub fn sweep_csv(result: &SweepResult) -> String {
    let mut out = format!("{SWEEP_HEADER}\n");
    for r in &result.rows {
        let mut fields = vec![format_number(r.value)];
        for w in r.poles {
            fields.push(format_number(w.re));
            fields.push(format_number(w.im));
        }
        for k in 0..3 {
            fields.push(
                r.peaks
                    .peaks
                    .get(k)
                    .map_or(String::new(), |p| format_number(p.omega)),
            );
        }
        row(&mut out, fields);
    }
    out
}

pub const EVOLVE_HEADER: &str = "t,t_ps,\
re_a_residue,im_a_residue,re_A_residue,im_A_residue,re_B_residue,im_B_residue,\
re_a_oracle,im_a_oracle,re_A_oracle,im_A_oracle,re_B_oracle,im_B_oracle";

/// One line per time: the propagator's cavity row from the residue sum and
/// from the matrix exponential. `t` is in ℏ/meV, `t_ps` in picoseconds.
pub fn evolve_csv(rows: &[(f64, [Complex64; 3], [Complex64; 3])]) -> String {
    let mut out = format!("{EVOLVE_HEADER}\n");
    for (t, residue, oracle) in rows {
        let mut fields = vec![format_number(*t), format_number(t * HBAR_PS_PER_MEV)];
        for c in residue.iter().chain(oracle) {
            fields.push(format_number(c.re));
            fields.push(format_number(c.im));
        }
        row(&mut out, fields);
    }
    out
}
