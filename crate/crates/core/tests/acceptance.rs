//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use hybrid_polariton::spectrum::{default_grid, NumeratorForm, NumericQuadrature};
use hybrid_polariton::sweep::SweepRow;
use hybrid_polariton::{
    build_pole_cubic, evolve_oracle, find_peaks, mode_decomposition, poles, reconstruct_propagator,
    run_sweep, solve_cubic_analytic, solve_cubic_numeric, EmissionSpectrum, ModelParams, PeakSet,
    SpectralGrid, SpectrumMethod, SweepParameter, SweepSpec,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Individual checks of one criterion plus free-form report lines.
#[derive(Default)]
struct Report {
    checks: Vec<(bool, String)>,
    notes: Vec<String>,
}

impl Report {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.checks.push((ok, what.into()));
    }

    fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }
}

fn criterion(id: &str, title: &str, limit: Duration, body: fn(&mut Report)) -> bool {
    let mut report = Report::default();
    let start = Instant::now();
    body(&mut report);
    let elapsed = start.elapsed();
    report.check(
        elapsed < limit,
        format!(
            "runtime {:.3} s < {} s",
            elapsed.as_secs_f64(),
            limit.as_secs()
        ),
    );
    let pass = report.checks.iter().all(|(ok, _)| *ok);
    let failed: Vec<_> = report
        .checks
        .iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, s)| s.as_str())
        .collect();
    let passed: Vec<_> = report
        .checks
        .iter()
        .filter(|(ok, _)| *ok)
        .map(|(_, s)| s.as_str())
        .collect();
    let summary = if pass {
        passed.join("; ")
    } else {
        format!(
            "failed: {} | passed: {}",
            failed.join("; "),
            passed.join("; ")
        )
    };
    println!(
        "[{}] {id} {title}: {summary}",
        if pass { "PASS" } else { "FAIL" }
    );
    for line in &report.notes {
        println!("       {line}");
    }
    pass
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn ac1(r: &mut Report) {
    let p = ModelParams::reference().decoupled();
    let set = poles(&p);
    let s = EmissionSpectrum::new(&p, &set).unwrap();
    let grid = default_grid(&set);
    let peaks = find_peaks(|w| s.quadrature(w), &grid);
    r.check(peaks.len() == 1, format!("{} peak(s)", peaks.len()));
    let Some(peak) = peaks.peaks.first() else {
        return;
    };
    r.check(
        (peak.omega - 1562.0).abs() <= 1e-6,
        format!("centre {:.7} meV", peak.omega),
    );
    let expected = 2.0 * p.n_photons / p.gamma_c;
    let err = rel(peak.height, expected);
    r.check(
        err <= 1e-6,
        format!("peak {:.9} vs 20 (rel {err:.1e})", peak.height),
    );
    let half =
        [1562.0 - p.gamma_c, 1562.0 + p.gamma_c].map(|w| rel(s.quadrature(w), expected / 2.0));
    r.check(
        half.iter().all(|&e| e <= 1e-6),
        format!(
            "half maximum at 1562 ± γ1 (rel {:.1e})",
            half[0].max(half[1])
        ),
    );
    let coeffs = mode_decomposition(&p, &set).unwrap();
    let numeric = NumericQuadrature::new(&p, &set, &coeffs, &grid)
        .unwrap()
        .value(1562.0);
    let err = rel(numeric, expected);
    r.check(
        err <= 1e-6,
        format!("numerical t-integral at 1562: {numeric:.9} (rel {err:.1e})"),
    );
    for method in [SpectrumMethod::LorentzApprox, SpectrumMethod::ClosedForm] {
        let worst = grid
            .points()
            .map(|w| rel(s.evaluate(method, w), s.quadrature(w)))
            .fold(0.0, f64::max);
        r.check(
            worst <= 1e-8,
            format!(
                "{} vs quadrature max rel {worst:.1e} (tol 1e-8)",
                method.as_str()
            ),
        );
    }
    r.note(format!(
        "closed form as published at 1562 ± γ1: {:.4} / {:.4} / {:.4} (quadrature 10 / 20 / 10)",
        s.closed_form(1562.0 - p.gamma_c),
        s.closed_form(1562.0),
        s.closed_form(1562.0 + p.gamma_c)
    ));
}

fn ac2(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut root, mut vieta, mut slack, mut failures) = (0.0f64, 0.0f64, 0.0f64, 0);
    let draws = 2000;
    for _ in 0..draws {
        let p = common::random_params(&mut rng);
        let cubic = build_pole_cubic(&p);
        let a = solve_cubic_analytic(&cubic);
        let Ok(n) = solve_cubic_numeric(&cubic) else {
            failures += 1;
            continue;
        };
        for j in 0..3 {
            let d = a.get(j) - n.get(j);
            root = root.max(d.re.abs()).max(d.im.abs());
        }
        for set in [&a, &n] {
            let [w1, w2, w3] = set.poles();
            let sums = [
                (w1 + w2 + w3, -cubic.c2()),
                (w1 * w2 + w1 * w3 + w2 * w3, cubic.c1()),
                (w1 * w2 * w3, -cubic.c0()),
            ];
            for (x, e) in sums {
                vieta = vieta.max((x - e).norm() / e.norm());
            }
            for g in set.decay_rates() {
                slack = slack.max(p.min_damping() - g).max(g - p.max_damping());
            }
        }
    }
    r.check(
        failures == 0,
        format!("{draws} draws, {failures} non-converged"),
    );
    r.check(root <= 1e-9, format!("analytic vs numeric {root:.1e} meV"));
    r.check(vieta <= 1e-10, format!("Vieta rel {vieta:.1e}"));
    r.check(
        slack <= 1e-9,
        format!("damping bound excess {:.1e}", slack.max(0.0)),
    );
}

fn ac3(r: &mut Report) {
    let p = ModelParams::reference();
    let set = poles(&p);
    let coeffs = mode_decomposition(&p, &set).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let t = rng.gen_range(0.0..20.0);
        let residue = reconstruct_propagator(&coeffs, &set, t);
        let oracle = evolve_oracle(&p, t).cavity_row();
        for (a, b) in residue.iter().zip(oracle) {
            worst = worst.max((a.re - b.re).abs()).max((a.im - b.im).abs());
        }
    }
    r.check(
        worst <= 1e-8,
        format!("50 times, max |residue − exp(Mt)| {worst:.1e}"),
    );
    let [sa, s_w, s_f] = coeffs.sums();
    let identity = (sa - 1.0).norm().max(s_w.norm()).max(s_f.norm());
    r.check(
        identity <= 1e-10,
        format!("t = 0 sums off by {identity:.1e}"),
    );
}

fn ac4(r: &mut Report) {
    let p = ModelParams::reference();
    let set = poles(&p);
    let s = EmissionSpectrum::new(&p, &set).unwrap();
    let grid = SpectralGrid::new(1540.0, 1600.0, 6001).unwrap();
    let peaks = find_peaks(|w| s.quadrature(w), &grid);
    r.check(
        peaks.len() == 3,
        format!("{} maxima on [1540, 1600]", peaks.len()),
    );
    let rates = set.decay_rates();
    let gamma_max = rates.into_iter().fold(0.0, f64::max);
    let offsets: Vec<f64> = peaks
        .positions()
        .iter()
        .map(|&w| {
            set.positions()
                .iter()
                .map(|x| (w - x).abs())
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    let worst = offsets.iter().copied().fold(0.0, f64::max);
    r.check(
        worst <= gamma_max,
        format!("peak-pole offset ≤ {worst:.4} meV (max Γ {gamma_max:.4})"),
    );
    let distinct = (0..3).all(|i| (i + 1..3).all(|k| (rates[i] - rates[k]).abs() > 1e-3));
    r.check(
        distinct,
        format!(
            "decay rates {:.4}/{:.4}/{:.4} meV distinct",
            rates[0], rates[1], rates[2]
        ),
    );
    let lorentzian = peaks
        .peaks
        .iter()
        .map(|pk| rel(s.lorentz_approx(pk.omega), pk.height))
        .fold(0.0, f64::max);
    r.check(
        lorentzian <= 0.05,
        format!(
            "peak heights within {:.3}% of three Lorentzians",
            100.0 * lorentzian
        ),
    );
    for pk in &peaks.peaks {
        r.note(format!("peak {:.4} meV, height {:.4}", pk.omega, pk.height));
    }
}

fn ac5(r: &mut Report) {
    let g = 8.0_f64.sqrt();
    let p = ModelParams {
        omega_w: 1562.0,
        omega_f: 1562.0,
        omega_c: 1562.0,
        coupling_w: g,
        coupling_f: 0.0,
        gamma_c: 1e-4,
        gamma_w: 1e-4,
        gamma_f: 1e-4,
        n_photons: 1.0,
    };
    let set = poles(&p);
    // (ω − ω_F + iγ₃)·[(ω − Ω + iγ₁)(ω − ω_W + iγ₂) − Γ₁₃²]
    let mean = Complex64::new(
        0.5 * (p.omega_c + p.omega_w),
        -0.5 * (p.gamma_c + p.gamma_w),
    );
    let half_gap = (Complex64::new(
        0.5 * (p.omega_c - p.omega_w),
        -0.5 * (p.gamma_c - p.gamma_w),
    )
    .powi(2)
        + g * g)
        .sqrt();
    let expected = hybrid_polariton::PoleSet::new([
        mean - half_gap,
        Complex64::new(p.omega_f, -p.gamma_f),
        mean + half_gap,
    ]);
    let err = (0..3)
        .map(|j| (set.get(j) - expected.get(j)).norm())
        .fold(0.0, f64::max);
    r.check(err <= 1e-9, format!("poles vs quadratic factor {err:.1e}"));
    let s = EmissionSpectrum::new(&p, &set).unwrap();
    let all = find_peaks(|w| s.quadrature(w), &default_grid(&set));
    let top = all.peaks.iter().map(|pk| pk.height).fold(0.0, f64::max);
    let dominant = PeakSet {
        peaks: all
            .peaks
            .iter()
            .copied()
            .filter(|pk| pk.height > 0.01 * top)
            .collect(),
    };
    r.check(
        dominant.len() == 2,
        format!("{} dominant peaks", dominant.len()),
    );
    if let [split] = dominant.splittings()[..] {
        let err = rel(split, 2.0 * g);
        r.check(
            err <= 0.01,
            format!("splitting {split:.4} vs 5.6569 meV ({:.2e} rel)", err),
        );
    }
    let bare = set
        .iter()
        .any(|w| (w - Complex64::new(p.omega_f, -p.gamma_f)).norm() <= 1e-9);
    r.check(bare, "bare Frenkel line at ω_F − iγ3");
}

fn ac6(r: &mut Report) {
    let p = ModelParams::reference();
    let set = poles(&p);
    let s = EmissionSpectrum::new(&p, &set).unwrap();
    let pos = set.positions();
    let grid = SpectralGrid::new(pos[0] - 50.0, pos[2] + 50.0, 24001).unwrap();
    let area = s
        .curve(SpectrumMethod::Quadrature, &grid)
        .unwrap()
        .integral();
    let ratio = area / (2.0 * PI * p.n_photons);
    r.check(
        (ratio - 1.0).abs() <= 0.01,
        format!("∫S dω / 2π n̄ = {ratio:.5}"),
    );
}

fn ac7(r: &mut Report) {
    let p = ModelParams::reference();
    let set = poles(&p);
    let s = EmissionSpectrum::new(&p, &set).unwrap();
    let grid = SpectralGrid::new(1540.0, 1600.0, 6001).unwrap();
    let quad = find_peaks(|w| s.quadrature(w), &grid);
    let printed = find_peaks(|w| s.closed_form(w), &grid);
    let residue = find_peaks(|w| s.closed_form_with(NumeratorForm::Residue, w), &grid);
    let offsets = |set: &PeakSet| -> Vec<f64> {
        quad.positions()
            .iter()
            .map(|&q| {
                set.positions()
                    .iter()
                    .map(|x| (x - q).abs())
                    .fold(f64::INFINITY, f64::min)
            })
            .collect()
    };
    let printed_off = offsets(&printed);
    let worst = printed_off.iter().copied().fold(0.0, f64::max);
    r.check(
        printed.len() == quad.len(),
        format!(
            "closed form has {} maxima, quadrature {}",
            printed.len(),
            quad.len()
        ),
    );
    r.check(
        worst <= 0.05,
        format!("closed-form peak offset {worst:.4} meV (tol 0.05)"),
    );
    r.note("discrepancy report (meV):");
    r.note(format!(
        "  quadrature peaks          {:?}",
        rounded(&quad.positions())
    ));
    r.note(format!(
        "  closed form as published  {:?}",
        rounded(&printed.positions())
    ));
    r.note(format!(
        "  offsets to quadrature     {:?}",
        rounded(&printed_off)
    ));
    r.note(format!(
        "  closed form, residue numerators {:?} (max offset {:.1e})",
        rounded(&residue.positions()),
        offsets(&residue).into_iter().fold(0.0, f64::max)
    ));
    r.note("  the published numerators E·Δ·Δ/|Δ·Δ|² are nearly real, which makes");
    r.note("  each line dispersive: maxima shift by about +Γ_j and an extra one appears");
}

fn rounded(xs: &[f64]) -> Vec<f64> {
    xs.iter().map(|x| (x * 1e4).round() / 1e4).collect()
}

fn ac8(r: &mut Report) {
    let spec = SweepSpec {
        parameter: SweepParameter::Delta,
        start: -0.02,
        stop: 0.02,
        n_steps: 41,
        base: ModelParams::reference(),
    };
    let result = run_sweep(&spec).unwrap();
    r.check(
        result.rows.len() == 41,
        format!("{} rows", result.rows.len()),
    );
    let step_mev = spec.base.omega_f * (spec.stop - spec.start) / 40.0;
    let jump = result
        .rows
        .windows(2)
        .flat_map(|w| (0..3).map(move |k| (w[1].poles[k] - w[0].poles[k]).norm()))
        .fold(0.0, f64::max);
    r.check(
        jump <= step_mev,
        format!("largest branch step {jump:.3} meV (bare step {step_mev:.3})"),
    );
    let separation = |row: &SweepRow| {
        (0..3)
            .flat_map(|i| (i + 1..3).map(move |k| (i, k)))
            .map(|(i, k)| (row.poles[i].re - row.poles[k].re).abs())
            .fold(f64::INFINITY, f64::min)
    };
    let (min_sep, at) = result
        .rows
        .iter()
        .map(|row| (separation(row), row.value))
        .fold((f64::INFINITY, 0.0), |a, b| if b.0 < a.0 { b } else { a });
    r.check(
        min_sep > 0.0,
        format!("min branch separation {min_sep:.3} meV at δ = {at:.4}"),
    );
    let ordered = result
        .rows
        .iter()
        .all(|row| row.poles[0].re < row.poles[1].re && row.poles[1].re < row.poles[2].re);
    let bare_crossing = {
        let first = spec.parameter.apply(&spec.base, spec.start);
        let last = spec.parameter.apply(&spec.base, spec.stop);
        (first.omega_w - first.omega_f).signum() != (last.omega_w - last.omega_f).signum()
    };
    r.check(
        ordered && bare_crossing,
        "bare Wannier line crosses, polariton branches stay ordered",
    );
}

type Criterion = (&'static str, &'static str, u64, fn(&mut Report));

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1", "decoupled limit", 1, ac1),
        ("AC2", "solver cross-validation", 10, ac2),
        ("AC3", "dynamics oracle", 1, ac3),
        ("AC4", "reference spectrum", 5, ac4),
        ("AC5", "two-mode Rabi splitting", 1, ac5),
        ("AC6", "area rule", 5, ac6),
        ("AC7", "closed form vs quadrature", 5, ac7),
        ("AC8", "detuning anticrossing", 30, ac8),
    ];
    let mut failed = 0;
    for (id, title, secs, body) in criteria {
        if !criterion(id, title, Duration::from_secs(secs), body) {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
