//! Run configuration: defaults, flat `key = value` files, command-line
//! overrides, and a stable hash for reproducibility metadata.
//!
//! A configuration file is plain text, one `key = value` pair per line;
//! blank lines and lines starting with `#` are ignored.  Unknown keys are
//! rejected, not skipped, so a typo cannot silently fall back to a
//! default.  Values are applied in order: built-in defaults, then the
//! file, then `--set key=value` overrides, then the dedicated flags
//! (`--seed`, `--out`), so the most specific source wins.
//!
//! The hash covers every scientific key (everything except `out_dir`,
//! which only routes files) and is embedded in all outputs, so artifacts
//! can always be traced back to the exact configuration that made them.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use sphdiff::fields::{MSharing, PowerSpectrum};
use sphdiff::spectral::ModelParams;

/// All tunables of a run, resolved to concrete values.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Wave speed `c` of the evolution equation.
    pub c: f64,
    /// Relaxation time `gamma`.
    pub gamma: f64,
    /// Diffusivity scale `k`.
    pub k: f64,
    /// Fractional order `alpha` in `(1/2, 1]`.
    pub alpha: f64,
    /// Activation time `tau` of the driving noise.
    pub tau: f64,
    /// Observation time `t`.
    pub t: f64,
    /// Truncation degree of the simulated expansion.
    pub l: u32,
    /// Reference degree for error studies (must dominate `L`).
    pub l_ref: u32,
    /// Monte-Carlo sample count for the study commands.
    pub n_realizations: u32,
    /// Decay exponent of the initial-condition angular power spectrum.
    pub kappa1: f64,
    /// Decay exponent of the noise angular power spectrum.
    pub kappa2: f64,
    /// Scale of the initial spectrum at degrees >= 1.
    pub c_tilde: f64,
    /// Degree-0 power of the initial spectrum.
    pub d_tilde: f64,
    /// Scale of the noise spectrum at degrees >= 1.
    pub a_tilde: f64,
    /// Degree-0 power of the noise spectrum.
    pub k_tilde: f64,
    /// Base seed of the counter-based sampler.
    pub seed: u64,
    /// Band limit of the rendered maps (>= `L` for `simulate`).
    pub grid_l: u32,
    /// Output directory, created on demand.
    pub out_dir: String,
    /// Geodesic step of the increment-variance study.
    pub step: f64,
    /// Truncation degrees of the error study.
    pub l_list: Vec<u32>,
    /// Target continuity exponent of the increment-variance study.
    pub beta_star: f64,
    /// Noise order coupling: one Gaussian per `(l, |m|)` or per `(l, m)`.
    pub m_sharing: MSharing,
}

impl Default for RunConfig {
    /// Desk-scale defaults: unit wave speed and relaxation time,
    /// `k = 0.05`, `alpha = 0.9`, noise switching on at `tau = 0.04`,
    /// observed at `t = 0.4` with truncation degree 64.
    fn default() -> Self {
        RunConfig {
            c: 1.0,
            gamma: 1.0,
            k: 0.05,
            alpha: 0.9,
            tau: 0.04,
            t: 0.4,
            l: 64,
            l_ref: 800,
            n_realizations: 50,
            kappa1: 4.1,
            kappa2: 2.5,
            c_tilde: 1.0,
            d_tilde: 1.0,
            a_tilde: 10.0,
            k_tilde: 1.0,
            seed: 42,
            grid_l: 64,
            out_dir: "out".to_string(),
            step: 0.01,
            l_list: vec![50, 100, 200, 400],
            beta_star: 0.15,
            m_sharing: MSharing::SharedAbsM,
        }
    }
}

/// A configuration problem: a malformed line, an unknown key, a value of
/// the wrong type, or a violated cross-key invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err(msg: impl Into<String>) -> ConfigError {
    ConfigError(msg.into())
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str, kind: &str) -> Result<T, ConfigError> {
    value
        .trim()
        .parse()
        .map_err(|_| err(format!("key `{key}` needs {kind}, got `{value}`")))
}

impl RunConfig {
    /// Apply one `key = value` assignment.  Unknown keys are an error
    /// that names the key.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        match key {
            "c" => self.c = parse_num(key, value, "a real number")?,
            "gamma" => self.gamma = parse_num(key, value, "a real number")?,
            "k" => self.k = parse_num(key, value, "a real number")?,
            "alpha" => self.alpha = parse_num(key, value, "a real number")?,
            "tau" => self.tau = parse_num(key, value, "a real number")?,
            "t" => self.t = parse_num(key, value, "a real number")?,
            "L" => self.l = parse_num(key, value, "a nonnegative integer")?,
            "L_ref" => self.l_ref = parse_num(key, value, "a nonnegative integer")?,
            "n_realizations" => {
                self.n_realizations = parse_num(key, value, "a nonnegative integer")?;
            }
            "kappa1" => self.kappa1 = parse_num(key, value, "a real number")?,
            "kappa2" => self.kappa2 = parse_num(key, value, "a real number")?,
            "c_tilde" => self.c_tilde = parse_num(key, value, "a real number")?,
            "d_tilde" => self.d_tilde = parse_num(key, value, "a real number")?,
            "a_tilde" => self.a_tilde = parse_num(key, value, "a real number")?,
            "k_tilde" => self.k_tilde = parse_num(key, value, "a real number")?,
            "seed" => self.seed = parse_num(key, value, "an unsigned 64-bit integer")?,
            "grid_L" => self.grid_l = parse_num(key, value, "a nonnegative integer")?,
            "out_dir" => {
                if value.is_empty() {
                    return Err(err("key `out_dir` needs a nonempty path"));
                }
                self.out_dir = value.to_string();
            }
            "step" => self.step = parse_num(key, value, "a real number")?,
            "L_list" => {
                let list: Result<Vec<u32>, _> = value
                    .split(',')
                    .map(|part| parse_num::<u32>(key, part, "comma-separated integers"))
                    .collect();
                let list = list?;
                if list.is_empty() {
                    return Err(err("key `L_list` needs at least one degree"));
                }
                self.l_list = list;
            }
            "beta_star" => self.beta_star = parse_num(key, value, "a real number")?,
            "m_sharing" => {
                self.m_sharing = match value {
                    "shared" => MSharing::SharedAbsM,
                    "independent" => MSharing::Independent,
                    other => {
                        return Err(err(format!(
                            "key `m_sharing` must be `shared` or `independent`, got `{other}`"
                        )));
                    }
                };
            }
            other => return Err(err(format!("unknown config key `{other}`"))),
        }
        Ok(())
    }

    /// Apply a whole config file (flat `key = value` lines, `#` comments).
    pub fn apply_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| err(format!("cannot read config file {}: {e}", path.display())))?;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                err(format!(
                    "{}:{}: expected `key = value`, got `{raw}`",
                    path.display(),
                    idx + 1
                ))
            })?;
            self.set(key.trim(), value.trim())
                .map_err(|e| err(format!("{}:{}: {e}", path.display(), idx + 1)))?;
        }
        Ok(())
    }

    /// Apply one `--set key=value` override.
    pub fn apply_set(&mut self, assignment: &str) -> Result<(), ConfigError> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| err(format!("--set needs `key=value`, got `{assignment}`")))?;
        self.set(key.trim(), value.trim())
    }

    /// Check cross-key invariants that individual assignments cannot see.
    /// The model parameters and both spectra must be constructible, and
    /// the study degrees must not exceed the reference degree.
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.model_params().map_err(|e| err(e.to_string()))?;
        self.initial_spectrum()?;
        self.noise_spectrum()?;
        if !(self.t.is_finite() && self.t >= 0.0) {
            return Err(err(format!(
                "`t` must be a finite nonnegative time, got {}",
                self.t
            )));
        }
        if self.l > self.l_ref {
            return Err(err(format!(
                "`L` = {} must not exceed `L_ref` = {}",
                self.l, self.l_ref
            )));
        }
        if let Some(&worst) = self.l_list.iter().find(|&&l| l > self.l_ref) {
            return Err(err(format!(
                "`L_list` entry {worst} exceeds `L_ref` = {}",
                self.l_ref
            )));
        }
        Ok(())
    }

    /// The validated model parameters.
    pub fn model_params(&self) -> sphdiff::Result<ModelParams> {
        ModelParams::new(self.c, self.gamma, self.k, self.alpha, self.tau)
    }

    /// Angular power spectrum of the initial condition:
    /// degree 0 carries `d_tilde`, higher degrees `c_tilde * l^{-kappa1}`.
    pub fn initial_spectrum(&self) -> Result<PowerSpectrum, ConfigError> {
        PowerSpectrum::new(self.d_tilde, self.c_tilde, self.kappa1)
            .map_err(|e| err(format!("initial spectrum (d_tilde/c_tilde/kappa1): {e}")))
    }

    /// Angular power spectrum of the noise: degree 0 carries `k_tilde`,
    /// higher degrees `a_tilde * l^{-kappa2}`.
    pub fn noise_spectrum(&self) -> Result<PowerSpectrum, ConfigError> {
        PowerSpectrum::new(self.k_tilde, self.a_tilde, self.kappa2)
            .map_err(|e| err(format!("noise spectrum (k_tilde/a_tilde/kappa2): {e}")))
    }

    /// Every scientific key with its canonical textual value, sorted by
    /// key.  `out_dir` is deliberately absent: it routes files without
    /// affecting their contents, so two runs into different directories
    /// stay byte-identical.
    pub fn resolved(&self) -> BTreeMap<String, String> {
        let mut map = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            map.insert(k.to_string(), v);
        };
        put("c", format!("{:?}", self.c));
        put("gamma", format!("{:?}", self.gamma));
        put("k", format!("{:?}", self.k));
        put("alpha", format!("{:?}", self.alpha));
        put("tau", format!("{:?}", self.tau));
        put("t", format!("{:?}", self.t));
        put("L", self.l.to_string());
        put("L_ref", self.l_ref.to_string());
        put("n_realizations", self.n_realizations.to_string());
        put("kappa1", format!("{:?}", self.kappa1));
        put("kappa2", format!("{:?}", self.kappa2));
        put("c_tilde", format!("{:?}", self.c_tilde));
        put("d_tilde", format!("{:?}", self.d_tilde));
        put("a_tilde", format!("{:?}", self.a_tilde));
        put("k_tilde", format!("{:?}", self.k_tilde));
        put("seed", self.seed.to_string());
        put("grid_L", self.grid_l.to_string());
        put("step", format!("{:?}", self.step));
        put(
            "L_list",
            self.l_list
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        put("beta_star", format!("{:?}", self.beta_star));
        put(
            "m_sharing",
            match self.m_sharing {
                MSharing::SharedAbsM => "shared".to_string(),
                MSharing::Independent => "independent".to_string(),
            },
        );
        map
    }

    /// FNV-1a hash of the resolved configuration, as 16 hex digits.
    pub fn hash(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for (key, value) in self.resolved() {
            for byte in key.bytes().chain([b'='].into_iter()).chain(value.bytes()) {
                h ^= byte as u64;
                h = h.wrapping_mul(0x1000_0000_01b3);
            }
            h ^= b'\n' as u64;
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
        format!("{h:016x}")
    }
}
