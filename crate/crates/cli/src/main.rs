//! Batch front end for the spherical fractional-diffusion simulator.
//!
//! `sphdiff` reads one flat configuration (defaults, optionally a file,
//! then command-line overrides), runs a single subcommand against it, and
//! writes plot-ready artifacts stamped with the configuration hash.  With
//! a fixed configuration and seed every subcommand is bit-reproducible,
//! independent of the worker-thread count.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::RunConfig;

const CONFIG_HELP: &str = "\
Configuration sources, least to most specific: built-in defaults, the
--config file, --set overrides, then the dedicated flags --seed/--out.
Config files are flat `key = value` lines; `#` starts a comment line;
unknown keys are rejected.

Keys (defaults): c (1), gamma (1), k (0.05), alpha (0.9), tau (0.04),
t (0.4), L (64), L_ref (800), n_realizations (50), kappa1 (4.1),
kappa2 (2.5), c_tilde (1), d_tilde (1), a_tilde (10), k_tilde (1),
seed (42), grid_L (64), out_dir (out), step (0.01),
L_list (50,100,200,400), beta_star (0.15), m_sharing (shared).

Exit codes: 0 success, 2 configuration error, 3 numerical-accuracy
failure, 4 validation failure.";

#[derive(Parser)]
#[command(
    name = "sphdiff",
    version,
    about = "Spectral simulator for time-fractional hyperbolic diffusion on the unit sphere",
    after_help = CONFIG_HELP
)]
struct Cli {
    /// Flat `key = value` configuration file (`#` starts a comment line).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Per-key override `key=value`, applied after the config file
    /// (repeatable).
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,

    /// Sampling seed; overrides `seed` from the other sources.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output directory; overrides `out_dir` from the other sources.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Cap the worker-thread count.  Results do not depend on it.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample one solution and write coefficient + map artifacts.
    Simulate,
    /// Tabulate per-degree model quantities at the observation time.
    Spectrum,
    /// Monte-Carlo truncation-error study against a reference degree.
    Errors,
    /// Increment-variance (continuity) study along a meridian.
    Hoelder,
    /// Run the self-check suite; nonzero exit on the first failure.
    Validate,
}

fn resolve_config(cli: &Cli) -> Result<RunConfig, config::ConfigError> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        cfg.apply_file(path)?;
    }
    for assignment in &cli.set {
        cfg.apply_set(assignment)?;
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(out) = &cli.out {
        cfg.out_dir = out.display().to_string();
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Accuracy refusals are a distinct failure class (exit 3); everything
/// else a command can return traces back to the configuration (exit 2).
fn exit_code_for(e: &sphdiff::Error) -> u8 {
    match e {
        sphdiff::Error::Accuracy { .. } | sphdiff::Error::GammaPole(_) => 3,
        _ => 2,
    }
}

fn dispatch(command: &Command, cfg: &RunConfig) -> sphdiff::Result<u8> {
    match command {
        Command::Simulate => commands::cmd_simulate(cfg).map(|()| 0),
        Command::Spectrum => commands::cmd_spectrum(cfg).map(|()| 0),
        Command::Errors => commands::cmd_errors(cfg).map(|()| 0),
        Command::Hoelder => commands::cmd_hoelder(cfg).map(|()| 0),
        Command::Validate => commands::cmd_validate(cfg).map(|ok| if ok { 0 } else { 4 }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match resolve_config(&cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(2);
        }
    };
    let run = || dispatch(&cli.command, &cfg);
    let outcome = match cli.threads {
        Some(n) => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool,
                Err(e) => {
                    eprintln!("config error: cannot build a {n}-thread pool: {e}");
                    return ExitCode::from(2);
                }
            };
            pool.install(run)
        }
        None => run(),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
