//! The five batch commands: snapshot simulation, the per-degree spectrum
//! table, the two Monte-Carlo studies, and the self-check suite.
//!
//! Every command resolves its inputs from a validated [`RunConfig`],
//! writes its artifacts under `out_dir`, and stamps them twice: CSV files
//! open with a `# config_hash=... version=...` comment line, and each
//! command leaves a `<command>.meta.json` sidecar carrying the full
//! resolved configuration next to the data files it lists.  PGM rasters
//! are covered by the sidecar alone, so the binary payload stays plain.

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{Map, Value};

use sphdiff::experiments::{
    fubini_variance_check, hoelder_study, truncation_error_study, StudyTable,
};
use sphdiff::fields::{
    sample_initial, sample_inhom_with, evolve_hom, write_snapshot_csv, PowerSpectrum, RngStream,
    SolutionSnapshot,
};
use sphdiff::sht::{
    analyze, legendre, make_grid, synthesize, write_map_csv, write_map_pgm, y_real,
    HarmonicCoeffs,
};
use sphdiff::spectral::{
    branch, caputo_residual, f_coeff, lambda, psi, sigma2, ModelParams,
};
use sphdiff::Error;

use crate::config::RunConfig;

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// The comment line prepended to every CSV artifact.
fn stamp(cfg: &RunConfig) -> String {
    format!("# config_hash={} version={}", cfg.hash(), VERSION)
}

fn ensure_out_dir(cfg: &RunConfig) -> sphdiff::Result<PathBuf> {
    let dir = PathBuf::from(&cfg.out_dir);
    fs::create_dir_all(&dir)?;
    Ok(dir)
}

/// Model parameters and the two spectra, rebuilt from a config that has
/// already passed [`RunConfig::validate`].
fn science(cfg: &RunConfig) -> sphdiff::Result<(ModelParams, PowerSpectrum, PowerSpectrum)> {
    let params = cfg.model_params()?;
    let cspec = cfg.initial_spectrum().map_err(|e| Error::invalid(e.0))?;
    let aspec = cfg.noise_spectrum().map_err(|e| Error::invalid(e.0))?;
    Ok((params, cspec, aspec))
}

/// Integer-valued cells print as integers, everything else in scientific
/// notation with 17 significant digits (same convention as the tables).
fn fmt_cell(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v:.16e}")
    }
}

/// Write `<command>.meta.json`: command, version, config hash, resolved
/// configuration, optional study metadata, and the produced file list.
fn write_meta(
    dir: &Path,
    command: &str,
    cfg: &RunConfig,
    study: Option<&BTreeMap<String, String>>,
    files: &[String],
) -> sphdiff::Result<String> {
    let mut root = Map::new();
    root.insert("command".into(), Value::String(command.into()));
    root.insert("version".into(), Value::String(VERSION.into()));
    root.insert("config_hash".into(), Value::String(cfg.hash()));
    root.insert(
        "config".into(),
        Value::Object(
            cfg.resolved()
                .into_iter()
                .map(|(k, v)| (k, Value::String(v)))
                .collect(),
        ),
    );
    if let Some(meta) = study {
        root.insert(
            "study".into(),
            Value::Object(
                meta.iter()
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect(),
            ),
        );
    }
    root.insert(
        "files".into(),
        Value::Array(files.iter().map(|f| Value::String(f.clone())).collect()),
    );
    let text = serde_json::to_string_pretty(&Value::Object(root)).expect("string-only json tree");
    let name = format!("{command}.meta.json");
    fs::write(dir.join(&name), text + "\n")?;
    Ok(name)
}

/// Write a study table as `<name>.csv` (stamped) plus its sidecar.
fn write_study(
    dir: &Path,
    name: &str,
    cfg: &RunConfig,
    table: &StudyTable,
) -> sphdiff::Result<Vec<String>> {
    let csv_name = format!("{name}.csv");
    let mut out = BufWriter::new(File::create(dir.join(&csv_name))?);
    writeln!(out, "{}", stamp(cfg))?;
    table.write_csv(&mut out)?;
    out.flush()?;
    let files = vec![csv_name];
    write_meta(dir, name, cfg, Some(table.metadata()), &files)?;
    Ok(files)
}

/// Sample one solution snapshot, write its coefficients, and render the
/// three field maps (homogeneous, noise-driven, combined) as CSV + PGM.
pub fn cmd_simulate(cfg: &RunConfig) -> sphdiff::Result<()> {
    if cfg.grid_l < cfg.l {
        return Err(Error::invalid(format!(
            "`grid_L` = {} cannot render degree `L` = {}; raise `grid_L` to at least `L`",
            cfg.grid_l, cfg.l
        )));
    }
    let (params, cspec, aspec) = science(cfg)?;
    let rng = RngStream::new(cfg.seed, 0);
    let initial = sample_initial(&cspec, cfg.l, &rng);
    let hom = evolve_hom(&initial, &params, cfg.t)?;
    let inhom = sample_inhom_with(&params, &aspec, cfg.l, cfg.t, &rng, cfg.m_sharing)?;
    let snap = SolutionSnapshot::new(cfg.t, hom, inhom)?;

    let dir = ensure_out_dir(cfg)?;
    let mut files = Vec::new();

    let mut out = BufWriter::new(File::create(dir.join("snapshot.csv"))?);
    writeln!(out, "{}", stamp(cfg))?;
    write_snapshot_csv(&snap, &mut out)?;
    out.flush()?;
    files.push("snapshot.csv".to_string());

    let grid = make_grid(cfg.grid_l);
    for (tag, coeffs) in [
        ("hom", &snap.hom),
        ("inhom", &snap.inhom),
        ("combined", &snap.combined),
    ] {
        let map = synthesize(coeffs, &grid)?;
        let csv_name = format!("map_{tag}.csv");
        let mut out = BufWriter::new(File::create(dir.join(&csv_name))?);
        writeln!(out, "{}", stamp(cfg))?;
        write_map_csv(&map, &mut out)?;
        out.flush()?;
        files.push(csv_name);
        let pgm_name = format!("map_{tag}.pgm");
        let mut out = BufWriter::new(File::create(dir.join(&pgm_name))?);
        write_map_pgm(&map, &mut out)?;
        out.flush()?;
        files.push(pgm_name);
    }
    write_meta(&dir, "simulate", cfg, None, &files)?;

    println!(
        "simulate: degree {} at t = {} (seed {}) -> {}",
        cfg.l,
        cfg.t,
        cfg.seed,
        dir.display()
    );
    for f in &files {
        println!("  wrote {f}");
    }
    Ok(())
}

/// Tabulate the per-degree quantities at the observation time: the
/// eigenvalue, the damping regime, the relaxation factor, the noise
/// variance, and the two spectral energy terms.
pub fn cmd_spectrum(cfg: &RunConfig) -> sphdiff::Result<()> {
    let (params, cspec, aspec) = science(cfg)?;
    let dt = cfg.t - params.tau();
    let rows: sphdiff::Result<Vec<(f64, f64)>> = (0..=cfg.l)
        .into_par_iter()
        .map(|ell| {
            let f = f_coeff(&params, ell, cfg.t)?;
            let s2 = if dt > 0.0 {
                sigma2(&params, ell, dt, 1e-8)?
            } else {
                0.0
            };
            Ok((f, s2))
        })
        .collect();
    let rows = rows?;

    let dir = ensure_out_dir(cfg)?;
    let mut out = BufWriter::new(File::create(dir.join("spectrum.csv"))?);
    writeln!(out, "{}", stamp(cfg))?;
    writeln!(out, "ell,lambda,regime,F,sigma2,C_term,A_term")?;
    for (ell, &(f, s2)) in rows.iter().enumerate() {
        let ell = ell as u32;
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            ell,
            fmt_cell(lambda(ell)),
            branch(&params, ell).regime,
            fmt_cell(f),
            fmt_cell(s2),
            fmt_cell(cspec.value(ell) * f * f),
            fmt_cell(aspec.value(ell) * s2),
        )?;
    }
    out.flush()?;

    let mut study = BTreeMap::new();
    study.insert("omega".to_string(), format!("{:?}", params.omega()));
    study.insert("varkappa".to_string(), format!("{:?}", params.varkappa()));
    study.insert("t".to_string(), format!("{:?}", cfg.t));
    write_meta(&dir, "spectrum", cfg, Some(&study), &["spectrum.csv".to_string()])?;

    println!(
        "spectrum: degrees 0..={} at t = {} (critical degree {:.4}) -> {}",
        cfg.l,
        cfg.t,
        params.varkappa(),
        dir.join("spectrum.csv").display()
    );
    Ok(())
}

/// Monte-Carlo truncation-error study against the reference degree.
pub fn cmd_errors(cfg: &RunConfig) -> sphdiff::Result<()> {
    let (params, cspec, aspec) = science(cfg)?;
    let rng = RngStream::new(cfg.seed, 0);
    let mut table = truncation_error_study(
        &params,
        &cspec,
        &aspec,
        &cfg.l_list,
        cfg.l_ref,
        cfg.t,
        cfg.n_realizations,
        &rng,
    )?;
    table.set_meta("config_hash", cfg.hash());
    table.set_meta("version", VERSION);

    let dir = ensure_out_dir(cfg)?;
    write_study(&dir, "errors", cfg, &table)?;

    let meta = table.metadata();
    println!(
        "errors: degrees {:?} against reference {} with {} realizations",
        cfg.l_list, cfg.l_ref, cfg.n_realizations
    );
    println!(
        "  fitted log-log slope {} (theoretical rate exponent {})",
        meta.get("slope").map_or("?", |s| s.as_str()),
        meta.get("kappa_tilde").map_or("?", |s| s.as_str()),
    );
    println!("  wrote {}", dir.join("errors.csv").display());
    Ok(())
}

/// Angular increment-variance (continuity) study along a meridian.
pub fn cmd_hoelder(cfg: &RunConfig) -> sphdiff::Result<()> {
    let (params, cspec, aspec) = science(cfg)?;
    let rng = RngStream::new(cfg.seed, 0);
    let mut table = hoelder_study(
        &params,
        &cspec,
        &aspec,
        cfg.l,
        cfg.t,
        cfg.n_realizations,
        cfg.step,
        cfg.beta_star,
        &rng,
    )?;
    table.set_meta("config_hash", cfg.hash());
    table.set_meta("version", VERSION);

    let dir = ensure_out_dir(cfg)?;
    write_study(&dir, "hoelder", cfg, &table)?;

    let meta = table.metadata();
    println!(
        "hoelder: degree {} at t = {}, {} realizations, step {}",
        cfg.l, cfg.t, cfg.n_realizations, cfg.step
    );
    println!(
        "  Var/d^(2 beta*) over the ratio window: median {}, max {}",
        meta.get("ratio_median_window").map_or("?", |s| s.as_str()),
        meta.get("ratio_max_window").map_or("?", |s| s.as_str()),
    );
    println!("  wrote {}", dir.join("hoelder.csv").display());
    Ok(())
}

// --- the self-check suite ---------------------------------------------

type CheckResult = Result<String, String>;

/// Closed-form relaxation factor and kernel at `alpha = 1`, where the
/// mode equation is a damped classical oscillator with rates `z^-, z^+`:
/// `F = Re[(z+ e^{-z- t} - z- e^{-z+ t}) / (z+ - z-)]` and
/// `psi = Re[c^2 (e^{-z- t} - e^{-z+ t}) / (z+ - z-)]`.
fn classical_f_psi(params: &ModelParams, ell: u32, t: f64) -> (f64, f64) {
    let b = branch(params, ell);
    let span = b.z_plus - b.z_minus;
    let em = (-b.z_minus * t).exp();
    let ep = (-b.z_plus * t).exp();
    let f = ((b.z_plus * em - b.z_minus * ep) / span).re;
    let psi = (Complex64::new(params.c() * params.c(), 0.0) * (em - ep) / span).re;
    (f, psi)
}

/// σ² at degree 0 for `alpha = 1`, `c = gamma = 1`:
/// the kernel is `1 - e^{-s}`, so the variance integrates to
/// `t - 2 (1 - e^{-t}) + (1 - e^{-2t}) / 2`.
fn classical_sigma2_l0(t: f64) -> f64 {
    t - 2.0 * (1.0 - (-t).exp()) + 0.5 * (1.0 - (-2.0 * t).exp())
}

fn worst<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

fn check_ok(dev: f64, tol: f64, what: &str) -> CheckResult {
    if dev <= tol {
        Ok(format!("{what} = {dev:.2e} (tol {tol:.0e})"))
    } else {
        Err(format!("{what} = {dev:.2e} exceeds {tol:.0e}"))
    }
}

fn check_quadrature_measure() -> CheckResult {
    let grid = make_grid(32);
    let total: f64 = grid.weights().iter().sum::<f64>() * grid.n_phi() as f64;
    check_ok((total - 1.0).abs(), 1e-15, "|sum of weights - 1|")
}

fn check_addition_theorem() -> CheckResult {
    let points = [(0.3_f64, 0.0_f64), (1.2, 2.1), (2.6, 4.9)];
    let mut dev = 0.0_f64;
    for &(t1, p1) in &points {
        for &(t2, p2) in &points {
            let cosg = t1.cos() * t2.cos() + t1.sin() * t2.sin() * (p1 - p2).cos();
            for ell in (0..=64).step_by(8) {
                let lhs: f64 = (-(ell as i32)..=ell as i32)
                    .map(|m| y_real(ell, m, t1, p1) * y_real(ell, m, t2, p2))
                    .sum();
                let rhs = (2.0 * ell as f64 + 1.0) * legendre(ell, cosg.clamp(-1.0, 1.0));
                dev = dev.max((lhs - rhs).abs() / (2.0 * ell as f64 + 1.0));
            }
        }
    }
    check_ok(dev, 1e-10, "max addition-theorem defect")
}

fn round_trip_coeffs() -> HarmonicCoeffs {
    let rng = RngStream::new(2718, 0);
    let mut coeffs = HarmonicCoeffs::zeros(32);
    for ell in 0..=32u32 {
        for m in -(ell as i32)..=(ell as i32) {
            coeffs.set(ell, m, rng.standard_normal(ell, m, sphdiff::fields::Role::Initial));
        }
    }
    coeffs
}

fn check_round_trip() -> CheckResult {
    let coeffs = round_trip_coeffs();
    let grid = make_grid(32);
    let map = synthesize(&coeffs, &grid).map_err(|e| e.to_string())?;
    let back = analyze(&map, 32).map_err(|e| e.to_string())?;
    let dev = worst(
        coeffs
            .data()
            .iter()
            .zip(back.data())
            .map(|(a, b)| (a - b).abs()),
    );
    check_ok(dev, 1e-10, "max round-trip defect")
}

fn check_parseval() -> CheckResult {
    let coeffs = round_trip_coeffs();
    let grid = make_grid(32);
    let map = synthesize(&coeffs, &grid).map_err(|e| e.to_string())?;
    let quad: f64 = map
        .values()
        .iter()
        .enumerate()
        .map(|(idx, v)| grid.weights()[idx / grid.n_phi()] * v * v)
        .sum();
    let dev = (quad - coeffs.energy()).abs() / coeffs.energy();
    check_ok(dev, 1e-10, "relative energy defect")
}

fn check_rate_identities(params: &ModelParams) -> CheckResult {
    let c2 = params.c() * params.c();
    let want_sum = c2 / params.gamma();
    let mut dev = 0.0_f64;
    for ell in 0..=300u32 {
        let b = branch(params, ell);
        let sum = b.z_plus + b.z_minus;
        let prod = b.z_plus * b.z_minus;
        let want_prod = c2 * params.k() * params.k() * lambda(ell);
        dev = dev.max((sum - want_sum).norm() / want_sum);
        dev = dev.max((prod - want_prod).norm() / want_prod.max(1.0));
    }
    check_ok(dev, 1e-12, "max rate-identity defect")
}

fn check_relaxation_at_zero(params: &ModelParams) -> CheckResult {
    let mut dev = 0.0_f64;
    for ell in 0..=200u32 {
        dev = dev.max((f_coeff(params, ell, 0.0).map_err(|e| e.to_string())? - 1.0).abs());
    }
    check_ok(dev, 1e-12, "max |F_l(0) - 1|")
}

fn check_mean_mode(params: &ModelParams) -> CheckResult {
    let mut dev = 0.0_f64;
    for i in 0..=20 {
        let t = 0.5 * i as f64;
        dev = dev.max((f_coeff(params, 0, t).map_err(|e| e.to_string())? - 1.0).abs());
    }
    check_ok(dev, 1e-10, "max |F_0(t) - 1| on [0, 10]")
}

fn check_classical_limit(params: &ModelParams) -> CheckResult {
    let classical = ModelParams::new(params.c(), params.gamma(), params.k(), 1.0, params.tau())
        .map_err(|e| e.to_string())?;
    let mut dev = 0.0_f64;
    for ell in [1u32, 3, 9, 10, 25, 60] {
        // The two-rate form needs distinct rates; skip a degree that sits
        // numerically on the critical collision.
        if branch(&classical, ell).m_ell.norm() < 1e-6 {
            continue;
        }
        for &t in &[0.1, 0.4, 1.0, 2.5] {
            let (f_want, psi_want) = classical_f_psi(&classical, ell, t);
            let f = f_coeff(&classical, ell, t).map_err(|e| e.to_string())?;
            let p = psi(&classical, ell, t).map_err(|e| e.to_string())?;
            dev = dev.max((f - f_want).abs() / f_want.abs().max(1.0));
            dev = dev.max((p - psi_want).abs() / psi_want.abs().max(1.0));
        }
    }
    check_ok(dev, 1e-8, "max classical-limit defect")
}

fn check_variance_closed_form() -> CheckResult {
    let oracle = ModelParams::new(1.0, 1.0, 0.05, 1.0, 0.0).map_err(|e| e.to_string())?;
    let mut dev = 0.0_f64;
    for &t in &[0.5, 1.0, 2.0] {
        let got = sigma2(&oracle, 0, t, 1e-8).map_err(|e| e.to_string())?;
        dev = dev.max((got - classical_sigma2_l0(t)).abs());
    }
    check_ok(dev, 1e-8, "max degree-0 closed-form defect")
}

fn check_variance_monotone(params: &ModelParams) -> CheckResult {
    for &ell in &[0u32, 5, 12] {
        let mut prev = 0.0_f64;
        for i in 1..=9 {
            let t = 0.25 * i as f64;
            let s2 = sigma2(params, ell, t, 1e-8).map_err(|e| e.to_string())?;
            if s2 < prev * (1.0 - 1e-9) {
                return Err(format!(
                    "sigma2({ell}, {t}) = {s2:.6e} dropped below sigma2 at the previous time {prev:.6e}"
                ));
            }
            prev = s2;
        }
    }
    Ok("nondecreasing on degrees {0, 5, 12}, t in [0.25, 2.25]".to_string())
}

fn check_variance_identity() -> CheckResult {
    let p08 = ModelParams::new(1.0, 1.0, 0.05, 0.8, 0.0).map_err(|e| e.to_string())?;
    let (lhs, rhs) = fubini_variance_check(&p08, 3, 0.5, 1e-6).map_err(|e| e.to_string())?;
    let dev_a = (lhs - rhs).abs() / rhs.max(1e-300);
    let p10 = ModelParams::new(1.0, 1.0, 0.05, 1.0, 0.0).map_err(|e| e.to_string())?;
    let (lhs, rhs) = fubini_variance_check(&p10, 0, 1.0, 1e-6).map_err(|e| e.to_string())?;
    let dev_b = (lhs - rhs).abs() / rhs;
    // At alpha = 1, l = 0, c = gamma = 1 the once-integrated kernel is
    // s - (1 - e^{-s}), so the smoothed variance at t = 1 integrates to
    // 1/3 - 2/e + (1 - e^{-2})/2 exactly.
    let exact = 1.0 / 3.0 - 2.0 / std::f64::consts::E + 0.5 * (1.0 - (-2.0_f64).exp());
    let dev_c = (rhs - exact).abs();
    check_ok(worst([dev_a, dev_b, dev_c]), 1e-6, "max variance-identity defect")
}

fn check_residual_shrinks(params: &ModelParams) -> CheckResult {
    let t_grid = [0.25, 0.5, 0.75, 1.0];
    let mut prev = f64::INFINITY;
    let mut last = 0.0;
    for &dt in &[1e-2, 5e-3, 2.5e-3] {
        let r = caputo_residual(params, 5, &t_grid, dt).map_err(|e| e.to_string())?;
        if r >= prev {
            return Err(format!(
                "residual {r:.3e} at dt = {dt} did not drop below {prev:.3e}"
            ));
        }
        prev = r;
        last = r;
    }
    Ok(format!("strictly decreasing, final residual {last:.2e}"))
}

/// Run the invariant suite.  Prints one line per check, stops at the
/// first failure, and returns whether everything passed.
pub fn cmd_validate(cfg: &RunConfig) -> sphdiff::Result<bool> {
    let params = cfg.model_params()?;
    let checks: Vec<(&str, Box<dyn Fn() -> CheckResult>)> = vec![
        (
            "quadrature weights form a probability measure",
            Box::new(check_quadrature_measure),
        ),
        ("addition theorem holds through degree 64", Box::new(check_addition_theorem)),
        ("analysis inverts synthesis at degree 32", Box::new(check_round_trip)),
        ("transform preserves energy", Box::new(check_parseval)),
        ("rate pairs satisfy their quadratic identities", {
            let p = params;
            Box::new(move || check_rate_identities(&p))
        }),
        ("relaxation factors start at one", {
            let p = params;
            Box::new(move || check_relaxation_at_zero(&p))
        }),
        ("mean mode never decays", {
            let p = params;
            Box::new(move || check_mean_mode(&p))
        }),
        ("classical limit matches the two-rate closed form", {
            let p = params;
            Box::new(move || check_classical_limit(&p))
        }),
        (
            "noise variance matches the classical closed form",
            Box::new(check_variance_closed_form),
        ),
        ("noise variance accumulates monotonically", {
            let p = params;
            Box::new(move || check_variance_monotone(&p))
        }),
        (
            "stochastic and iterated variances agree",
            Box::new(check_variance_identity),
        ),
        ("discrete fractional residual shrinks with the step", {
            let p = params;
            Box::new(move || check_residual_shrinks(&p))
        }),
    ];

    let total = checks.len();
    for (idx, (name, run)) in checks.iter().enumerate() {
        match run() {
            Ok(detail) => {
                println!("ok   {:>2}/{total}  {name}: {detail}", idx + 1);
            }
            Err(detail) => {
                println!("FAIL {:>2}/{total}  {name}: {detail}", idx + 1);
                println!("validate: stopped at the first failure ({idx} of {total} passed)");
                return Ok(false);
            }
        }
    }
    println!("validate: {total} checks passed");
    Ok(true)
}
