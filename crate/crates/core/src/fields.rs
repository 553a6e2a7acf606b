//! Angular power spectra and Gaussian random-field sampling on the sphere.
//!
//! An isotropic Gaussian field on the unit sphere is a random harmonic
//! expansion whose coefficients at degree `l` are independent centered
//! Gaussians with a common per-degree variance — the angular power
//! spectrum.  This module models the two spectra of the solution field
//! (`C_l` for the initial condition, `A_l` for the driving noise), samples
//! the harmonic coefficients of the homogeneous, noise-driven, and combined
//! solutions at a fixed time, and provides the exact second-moment
//! functions those samples must reproduce.
//!
//! **Determinism.**  All randomness flows through a counter-based
//! generator keyed by `(seed, realization, degree, order, role)`, so a
//! draw is a pure function of its key: results are identical across
//! thread counts, schedules, and platforms.
//!
//! **Order coupling of the noise.**  The driving noise can either share
//! one Gaussian per `(l, |m|)` between the `+m` and `-m` coefficients
//! ([`MSharing::SharedAbsM`], the written convention this crate follows
//! by default) or draw every `(l, m)` independently
//! ([`MSharing::Independent`]).  Shared draws leave every per-coefficient
//! variance unchanged but introduce a correlation between `+m` and `-m`,
//! so the *pointwise* field variance acquires a longitude ripple
//! proportional to `sin(2 m phi)`; it still agrees with the isotropic
//! formula of [`variance_theoretical`] at longitudes that are multiples
//! of `pi/2`, and the covariance of two points on a common meridian
//! (`phi` congruent mod `pi`) is unaffected.  Under
//! [`MSharing::Independent`] the field is exactly isotropic in second
//! moments.

use rayon::prelude::*;
use std::io::Write;

use crate::error::{Error, Result};
use crate::sht::HarmonicCoeffs;
use crate::spectral::{f_coeff, sigma2, ModelParams};

/// Algebraically decaying angular power spectrum.
///
/// `value(0) = amp0` and `value(l) = scale * l^{-exponent}` for `l >= 1`.
/// The exponent must exceed 2 (otherwise even the truncated variance sums
/// `sum (2l+1) value(l)` diverge as the truncation grows and no bound in
/// this crate applies).  Exponents in `(2, 4]` are accepted but flagged by
/// [`PowerSpectrum::is_truncation_only`]: truncated fields remain
/// well-defined, while the full-series regularity theory wants faster
/// decay; front ends should surface a warning.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerSpectrum {
    amp0: f64,
    scale: f64,
    exponent: f64,
}

impl PowerSpectrum {
    /// Validate and build a spectrum.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidArgument`] when `amp0 < 0`, `scale < 0`, any field
    /// is non-finite, or `exponent <= 2`.
    pub fn new(amp0: f64, scale: f64, exponent: f64) -> Result<Self> {
        if !amp0.is_finite() || amp0 < 0.0 {
            return Err(Error::invalid(format!(
                "spectrum amplitude at degree 0 must be finite and nonnegative, got {amp0}"
            )));
        }
        if !scale.is_finite() || scale < 0.0 {
            return Err(Error::invalid(format!(
                "spectrum scale must be finite and nonnegative, got {scale}"
            )));
        }
        if !exponent.is_finite() || exponent <= 2.0 {
            return Err(Error::invalid(format!(
                "spectrum exponent must exceed 2 for summable truncation tails, got {exponent}"
            )));
        }
        Ok(PowerSpectrum {
            amp0,
            scale,
            exponent,
        })
    }

    /// The identically zero spectrum (useful to switch a source off).
    pub fn zero() -> Self {
        PowerSpectrum {
            amp0: 0.0,
            scale: 0.0,
            exponent: 3.0,
        }
    }

    /// Variance at degree 0.
    pub fn amp0(&self) -> f64 {
        self.amp0
    }

    /// Multiplier of the power law at degrees `l >= 1`.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Decay exponent of the power law.
    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    /// Per-degree variance.
    pub fn value(&self, ell: u32) -> f64 {
        if ell == 0 {
            self.amp0
        } else {
            self.scale * (ell as f64).powf(-self.exponent)
        }
    }

    /// True when the decay is too slow (`exponent <= 4`) for the
    /// full-series moment bounds, so only truncated fields are covered.
    pub fn is_truncation_only(&self) -> bool {
        self.exponent <= 4.0
    }
}

/// What a random draw is used for; part of the counter-based key, so the
/// same `(realization, l, m)` produces unrelated streams per role.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Initial-condition coefficients.
    Initial,
    /// Driving-noise coefficients.
    Noise,
    /// Randomized rotations in isotropy checks.
    Rotation,
}

impl Role {
    fn tag(self) -> u64 {
        match self {
            Role::Initial => 0x49ab3c58d2e1f607,
            Role::Noise => 0xb6e15228c79d03a4,
            Role::Rotation => 0x7d31b9a4e5c86f12,
        }
    }
}

/// How the driving noise couples the `+m` and `-m` coefficients of one
/// degree (see the module docs for the second-moment consequences).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MSharing {
    /// One Gaussian per `(l, |m|)`, shared by both signs (default).
    #[default]
    SharedAbsM,
    /// A fresh Gaussian for every `(l, m)`.
    Independent,
}

/// Splitmix-style finalizer: the core bijective mixer of the generator.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Counter-based Gaussian stream for one realization of one experiment.
///
/// There is no mutable state: every draw is a pure function of
/// `(seed, realization, l, m, role)`.  Two independent 64-bit words are
/// derived per key and fed through the Box–Muller transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngStream {
    seed: u64,
    realization: u64,
}

impl RngStream {
    pub fn new(seed: u64, realization: u64) -> Self {
        RngStream { seed, realization }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn realization(&self) -> u64 {
        self.realization
    }

    /// The stream with the same seed but a different realization index;
    /// studies use this to derive one stream per Monte-Carlo sample.
    pub fn for_realization(&self, realization: u64) -> RngStream {
        RngStream {
            seed: self.seed,
            realization,
        }
    }

    fn key(&self, ell: u32, m: i32, role: Role) -> u64 {
        let mut h = mix(self.seed ^ 0x243f6a8885a308d3);
        h = mix(h ^ self.realization);
        h = mix(h ^ ((ell as u64) << 32 | (m as u32 as u64)));
        mix(h ^ role.tag())
    }

    /// Uniform draw in `[0, 1)` for the given key.
    pub fn uniform(&self, ell: u32, m: i32, role: Role) -> f64 {
        (mix(self.key(ell, m, role) ^ 0x452821e638d01377) >> 11) as f64
            / (1u64 << 53) as f64
    }

    /// Standard normal draw for the given key.
    pub fn standard_normal(&self, ell: u32, m: i32, role: Role) -> f64 {
        let k = self.key(ell, m, role);
        let b1 = mix(k ^ 0x452821e638d01377);
        let b2 = mix(k ^ 0x13198a2e03707344);
        // u1 in (0, 1] so the logarithm is finite; u2 in [0, 1).
        let u1 = ((b1 >> 11) + 1) as f64 / (1u64 << 53) as f64;
        let u2 = (b2 >> 11) as f64 / (1u64 << 53) as f64;
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }
}

/// Sample initial-condition coefficients: independent centered Gaussians
/// with `Var = spectrum.value(l)` for every coefficient of degree `l`.
pub fn sample_initial(spectrum: &PowerSpectrum, l_max: u32, rng: &RngStream) -> HarmonicCoeffs {
    let mut out = HarmonicCoeffs::zeros(l_max);
    for ell in 0..=l_max {
        let amp = spectrum.value(ell).sqrt();
        for m in -(ell as i32)..=(ell as i32) {
            out.set(ell, m, amp * rng.standard_normal(ell, m, Role::Initial));
        }
    }
    out
}

/// Propagate initial-condition coefficients to time `t`: every degree-`l`
/// coefficient is multiplied by the relaxation factor `F_l(t)`.
pub fn evolve_hom(initial: &HarmonicCoeffs, params: &ModelParams, t: f64) -> Result<HarmonicCoeffs> {
    let l_max = initial.l_max();
    let factors: Vec<f64> = (0..=l_max)
        .into_par_iter()
        .map(|ell| f_coeff(params, ell, t))
        .collect::<Result<Vec<f64>>>()?;
    let mut out = HarmonicCoeffs::zeros(l_max);
    for ell in 0..=l_max {
        for m in -(ell as i32)..=(ell as i32) {
            out.set(ell, m, factors[ell as usize] * initial.get(ell, m));
        }
    }
    Ok(out)
}

/// Standard deviations of the noise response per degree at time `t`:
/// `sqrt(sigma2(l, t - tau))` for `l = 0..=l_max`, or all zeros when the
/// noise has not switched on (`t <= tau`).
///
/// Computing these is the expensive part of noise sampling; callers
/// drawing many realizations at one time should compute the amplitudes
/// once and reuse them via [`sample_inhom_from_amplitudes`].
pub fn noise_amplitudes(params: &ModelParams, l_max: u32, t: f64) -> Result<Vec<f64>> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::invalid(format!(
            "time must be finite and nonnegative, got {t}"
        )));
    }
    if t <= params.tau() {
        return Ok(vec![0.0; l_max as usize + 1]);
    }
    let dt = t - params.tau();
    (0..=l_max)
        .into_par_iter()
        .map(|ell| Ok(sigma2(params, ell, dt, 1e-8)?.sqrt()))
        .collect()
}

/// Sample noise-response coefficients from precomputed per-degree
/// amplitudes (one entry per degree, `l_max = amps.len() - 1`).
pub fn sample_inhom_from_amplitudes(
    spectrum: &PowerSpectrum,
    amps: &[f64],
    rng: &RngStream,
    sharing: MSharing,
) -> Result<HarmonicCoeffs> {
    if amps.is_empty() {
        return Err(Error::invalid("amplitude table must be nonempty"));
    }
    let l_max = (amps.len() - 1) as u32;
    let mut out = HarmonicCoeffs::zeros(l_max);
    for ell in 0..=l_max {
        let amp = spectrum.value(ell).sqrt() * amps[ell as usize];
        for m in -(ell as i32)..=(ell as i32) {
            let key_m = match sharing {
                MSharing::SharedAbsM => m.abs(),
                MSharing::Independent => m,
            };
            out.set(ell, m, amp * rng.standard_normal(ell, key_m, Role::Noise));
        }
    }
    Ok(out)
}

/// Sample the noise-driven coefficients at time `t` with a chosen order
/// coupling.  Zero before and at the activation time `tau`.
pub fn sample_inhom_with(
    params: &ModelParams,
    spectrum: &PowerSpectrum,
    l_max: u32,
    t: f64,
    rng: &RngStream,
    sharing: MSharing,
) -> Result<HarmonicCoeffs> {
    let amps = noise_amplitudes(params, l_max, t)?;
    sample_inhom_from_amplitudes(spectrum, &amps, rng, sharing)
}

/// Sample the noise-driven coefficients at time `t` under the default
/// shared-`|m|` convention.
pub fn sample_inhom(
    params: &ModelParams,
    spectrum: &PowerSpectrum,
    l_max: u32,
    t: f64,
    rng: &RngStream,
) -> Result<HarmonicCoeffs> {
    sample_inhom_with(params, spectrum, l_max, t, rng, MSharing::SharedAbsM)
}

/// Entrywise sum of two coefficient sets of equal degree.
pub fn combine(hom: &HarmonicCoeffs, inhom: &HarmonicCoeffs) -> Result<HarmonicCoeffs> {
    if hom.l_max() != inhom.l_max() {
        return Err(Error::invalid(format!(
            "cannot combine expansions of degrees {} and {}",
            hom.l_max(),
            inhom.l_max()
        )));
    }
    let data = hom
        .data()
        .iter()
        .zip(inhom.data().iter())
        .map(|(a, b)| a + b)
        .collect();
    HarmonicCoeffs::from_vec(hom.l_max(), data)
}

/// Per-degree variance contributions `(2l+1) [C_l F_l(t)^2 + A_l
/// sigma2(l, t - tau)]` (noise term present only for `t > tau`).
fn degree_variances(
    params: &ModelParams,
    cspec: &PowerSpectrum,
    aspec: &PowerSpectrum,
    l_max: u32,
    t: f64,
) -> Result<Vec<f64>> {
    (0..=l_max)
        .into_par_iter()
        .map(|ell| {
            let f = f_coeff(params, ell, t)?;
            let mut v = cspec.value(ell) * f * f;
            if t > params.tau() {
                v += aspec.value(ell) * sigma2(params, ell, t - params.tau(), 1e-8)?;
            }
            Ok((2.0 * ell as f64 + 1.0) * v)
        })
        .collect()
}

/// Exact pointwise variance of the truncated solution field at time `t`
/// (isotropic formula; see the module docs for where it is exact under
/// the shared-`|m|` noise convention).
pub fn variance_theoretical(
    params: &ModelParams,
    cspec: &PowerSpectrum,
    aspec: &PowerSpectrum,
    l_max: u32,
    t: f64,
) -> Result<f64> {
    Ok(degree_variances(params, cspec, aspec, l_max, t)?.iter().sum())
}

/// Exact two-point covariance of the truncated solution field between
/// points separated by angle `acos(cos_angle)`.
pub fn covariance_theoretical(
    params: &ModelParams,
    cspec: &PowerSpectrum,
    aspec: &PowerSpectrum,
    l_max: u32,
    t: f64,
    cos_angle: f64,
) -> Result<f64> {
    if !(-1.0..=1.0).contains(&cos_angle) {
        return Err(Error::invalid(format!(
            "cosine of the separation angle must lie in [-1, 1], got {cos_angle}"
        )));
    }
    let by_degree = degree_variances(params, cspec, aspec, l_max, t)?;
    Ok(by_degree
        .iter()
        .enumerate()
        .map(|(ell, v)| v * crate::sht::legendre(ell as u32, cos_angle))
        .sum())
}

/// The three coefficient sets of one sampled solution at one time.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSnapshot {
    pub t: f64,
    pub l_max: u32,
    pub hom: HarmonicCoeffs,
    pub inhom: HarmonicCoeffs,
    pub combined: HarmonicCoeffs,
}

impl SolutionSnapshot {
    /// Assemble and validate a snapshot (all parts must share a degree).
    pub fn new(t: f64, hom: HarmonicCoeffs, inhom: HarmonicCoeffs) -> Result<Self> {
        let combined = combine(&hom, &inhom)?;
        Ok(SolutionSnapshot {
            t,
            l_max: hom.l_max(),
            hom,
            inhom,
            combined,
        })
    }
}

/// Write a snapshot as CSV rows `ell,m,hom,inhom,combined` with 17
/// significant digits.
pub fn write_snapshot_csv(snap: &SolutionSnapshot, out: &mut impl Write) -> Result<()> {
    writeln!(out, "ell,m,hom,inhom,combined")?;
    for ell in 0..=snap.l_max {
        for m in -(ell as i32)..=(ell as i32) {
            writeln!(
                out,
                "{ell},{m},{:.16e},{:.16e},{:.16e}",
                snap.hom.get(ell, m),
                snap.inhom.get(ell, m),
                snap.combined.get(ell, m)
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_params() -> ModelParams {
        ModelParams::new(1.0, 1.0, 0.05, 0.9, 0.04).unwrap()
    }

    #[test]
    fn spectrum_values_follow_the_power_law() {
        let s = PowerSpectrum::new(7.0, 3.0, 4.1).unwrap();
        assert_eq!(s.value(0), 7.0);
        assert_eq!(s.value(1), 3.0);
        assert!((s.value(2) - 3.0 * 2f64.powf(-4.1)).abs() < 1e-15);
        assert!(!s.is_truncation_only());
        assert!(PowerSpectrum::new(1.0, 1.0, 2.3).unwrap().is_truncation_only());
    }

    #[test]
    fn invalid_spectra_are_rejected() {
        assert!(PowerSpectrum::new(-1.0, 1.0, 3.0).is_err());
        assert!(PowerSpectrum::new(1.0, -0.5, 3.0).is_err());
        assert!(PowerSpectrum::new(1.0, 1.0, 2.0).is_err());
        assert!(PowerSpectrum::new(1.0, 1.0, f64::NAN).is_err());
        assert!(PowerSpectrum::new(f64::INFINITY, 1.0, 3.0).is_err());
    }

    #[test]
    fn zero_spectrum_vanishes_everywhere() {
        let s = PowerSpectrum::zero();
        for ell in 0..50 {
            assert_eq!(s.value(ell), 0.0);
        }
    }

    #[test]
    fn draws_are_pure_functions_of_their_keys() {
        let r = RngStream::new(42, 3);
        let a = r.standard_normal(5, -2, Role::Noise);
        let b = r.standard_normal(5, -2, Role::Noise);
        assert_eq!(a, b);
        // Any key change decorrelates the draw.
        assert_ne!(a, r.standard_normal(5, 2, Role::Noise));
        assert_ne!(a, r.standard_normal(5, -2, Role::Initial));
        assert_ne!(a, r.standard_normal(6, -2, Role::Noise));
        assert_ne!(a, RngStream::new(42, 4).standard_normal(5, -2, Role::Noise));
        assert_ne!(a, RngStream::new(43, 3).standard_normal(5, -2, Role::Noise));
        let u = r.uniform(5, -2, Role::Rotation);
        assert!((0.0..1.0).contains(&u));
    }

    #[test]
    fn gaussian_stream_has_standard_moments() {
        let n = 200_000u64;
        let mut sum = 0.0;
        let mut sum2 = 0.0;
        for j in 0..n {
            let z = RngStream::new(7, j).standard_normal(1, 0, Role::Initial);
            sum += z;
            sum2 += z * z;
        }
        let mean = sum / n as f64;
        let var = sum2 / n as f64 - mean * mean;
        // 3-sigma bands for the sample mean and variance.
        assert!(mean.abs() < 3.0 / (n as f64).sqrt(), "mean {mean}");
        assert!(
            (var - 1.0).abs() < 3.0 * (2.0 / n as f64).sqrt(),
            "variance {var}"
        );
    }

    #[test]
    fn initial_sample_matches_its_spectrum() {
        let spec = PowerSpectrum::new(4.0, 2.0, 3.0).unwrap();
        let c = sample_initial(&spec, 6, &RngStream::new(11, 0));
        // Deterministic reproduction.
        let c2 = sample_initial(&spec, 6, &RngStream::new(11, 0));
        assert_eq!(c.data(), c2.data());
        // Degree-wise empirical variance over realizations.
        let ell = 4u32;
        let n = 3000u64;
        let mut acc = 0.0;
        for j in 0..n {
            let s = sample_initial(&spec, ell, &RngStream::new(11, j));
            for m in -(ell as i32)..=(ell as i32) {
                let v = s.get(ell, m);
                acc += v * v;
            }
        }
        let est = acc / (n as f64 * (2.0 * ell as f64 + 1.0));
        let want = spec.value(ell);
        let se = want * (2.0 / (n as f64 * (2.0 * ell as f64 + 1.0))).sqrt();
        assert!(
            (est - want).abs() < 4.0 * se,
            "variance {est} vs {want} (se {se})"
        );
        // Zero spectrum gives the zero field.
        let z = sample_initial(&PowerSpectrum::zero(), 6, &RngStream::new(1, 0));
        assert!(z.data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn evolution_scales_each_degree_by_its_relaxation_factor() {
        let p = base_params();
        let spec = PowerSpectrum::new(1.0, 1.0, 4.1).unwrap();
        let init = sample_initial(&spec, 8, &RngStream::new(5, 2));
        let t = 0.4;
        let evolved = evolve_hom(&init, &p, t).unwrap();
        for ell in 0..=8u32 {
            let f = f_coeff(&p, ell, t).unwrap();
            for m in -(ell as i32)..=(ell as i32) {
                let want = f * init.get(ell, m);
                assert!((evolved.get(ell, m) - want).abs() < 1e-14 * want.abs().max(1e-14));
            }
        }
        // At t = 0 evolution is the identity.
        let same = evolve_hom(&init, &p, 0.0).unwrap();
        assert_eq!(same.data(), init.data());
        assert!(evolve_hom(&init, &p, -1.0).is_err());
    }

    #[test]
    fn noise_sample_is_zero_until_activation() {
        let p = base_params(); // activation time 0.04
        let spec = PowerSpectrum::new(1.0, 10.0, 2.5).unwrap();
        let rng = RngStream::new(21, 0);
        for &t in &[0.0, 0.02, 0.04] {
            let s = sample_inhom(&p, &spec, 5, t, &rng).unwrap();
            assert!(s.data().iter().all(|&v| v == 0.0), "noise on at t = {t}");
        }
        let s = sample_inhom(&p, &spec, 5, 0.1, &rng).unwrap();
        assert!(s.data().iter().any(|&v| v != 0.0));
        assert!(sample_inhom(&p, &spec, 5, -0.5, &rng).is_err());
    }

    #[test]
    fn order_coupling_conventions_differ_as_documented() {
        let p = base_params();
        let spec = PowerSpectrum::new(1.0, 10.0, 2.5).unwrap();
        let rng = RngStream::new(33, 1);
        let shared = sample_inhom_with(&p, &spec, 6, 0.4, &rng, MSharing::SharedAbsM).unwrap();
        let indep = sample_inhom_with(&p, &spec, 6, 0.4, &rng, MSharing::Independent).unwrap();
        // Shared |m|: +m and -m coefficients are identical (same Gaussian,
        // same amplitude); independent: they differ.
        for ell in 1..=6u32 {
            for m in 1..=(ell as i32) {
                assert_eq!(shared.get(ell, m), shared.get(ell, -m));
                assert_ne!(indep.get(ell, m), indep.get(ell, -m));
            }
        }
        // m = 0 agrees across conventions (same key either way).
        for ell in 0..=6u32 {
            assert_eq!(shared.get(ell, 0), indep.get(ell, 0));
        }
    }

    #[test]
    fn combine_adds_and_checks_degrees() {
        let spec = PowerSpectrum::new(1.0, 1.0, 3.0).unwrap();
        let a = sample_initial(&spec, 4, &RngStream::new(9, 0));
        let b = sample_initial(&spec, 4, &RngStream::new(9, 1));
        let c = combine(&a, &b).unwrap();
        for (i, v) in c.data().iter().enumerate() {
            assert_eq!(*v, a.data()[i] + b.data()[i]);
        }
        let d = sample_initial(&spec, 5, &RngStream::new(9, 2));
        assert!(combine(&a, &d).is_err());
    }

    #[test]
    fn theoretical_variance_reduces_to_known_pieces() {
        let p = base_params();
        let cspec = PowerSpectrum::new(1.0, 1.0, 4.1).unwrap();
        let zero = PowerSpectrum::zero();
        // Noise off: sum over degrees of (2l+1) C_l F_l^2.
        let t = 0.4;
        let v = variance_theoretical(&p, &cspec, &zero, 6, t).unwrap();
        let mut want = 0.0;
        for ell in 0..=6u32 {
            let f = f_coeff(&p, ell, t).unwrap();
            want += (2.0 * ell as f64 + 1.0) * cspec.value(ell) * f * f;
        }
        assert!((v - want).abs() < 1e-12 * want);
        // At zero separation the covariance is the variance.
        let aspec = PowerSpectrum::new(1.0, 10.0, 2.5).unwrap();
        let v2 = variance_theoretical(&p, &cspec, &aspec, 6, t).unwrap();
        let c2 = covariance_theoretical(&p, &cspec, &aspec, 6, t, 1.0).unwrap();
        assert!((v2 - c2).abs() < 1e-12 * v2);
        assert!(covariance_theoretical(&p, &cspec, &aspec, 6, t, 1.5).is_err());
        // Before activation the noise contributes nothing.
        let v3 = variance_theoretical(&p, &cspec, &aspec, 6, 0.02).unwrap();
        let v4 = variance_theoretical(&p, &cspec, &zero, 6, 0.02).unwrap();
        assert_eq!(v3, v4);
    }

    #[test]
    fn snapshot_assembles_and_serializes() {
        let p = base_params();
        let cspec = PowerSpectrum::new(1.0, 1.0, 4.1).unwrap();
        let aspec = PowerSpectrum::new(1.0, 10.0, 2.5).unwrap();
        let rng = RngStream::new(42, 0);
        let t = 0.4;
        let hom = evolve_hom(&sample_initial(&cspec, 3, &rng), &p, t).unwrap();
        let inhom = sample_inhom(&p, &aspec, 3, t, &rng).unwrap();
        let snap = SolutionSnapshot::new(t, hom.clone(), inhom.clone()).unwrap();
        assert_eq!(snap.l_max, 3);
        assert_eq!(snap.combined.get(2, 1), hom.get(2, 1) + inhom.get(2, 1));
        let mut buf = Vec::new();
        write_snapshot_csv(&snap, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + 16);
        assert!(text.starts_with("ell,m,hom,inhom,combined"));
        let last = text.lines().last().unwrap();
        assert!(last.starts_with("3,3,"));
        // Degree-mismatched parts are refused.
        let bad = sample_inhom(&p, &aspec, 4, t, &rng).unwrap();
        assert!(SolutionSnapshot::new(t, hom, bad).is_err());
    }
}
