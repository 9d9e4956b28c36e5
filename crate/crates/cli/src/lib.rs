//! Library half of the `xsuperint` command-line tool.

pub mod commands;
pub mod config;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use config::{Format, Settings};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const THREADS_ENV: &str = "XSUPERINT_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, config or parameters (exit 2).
    #[error("{0}")]
    Usage(String),
    /// A computation failed or a check did not pass (exit 1).
    #[error("{0}")]
    Failure(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) | CliError::Io(_) => EXIT_FAIL,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "xsuperint", version, about = "Exact and numerical checks for the X1-Jacobi superintegrable Hamiltonian")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the verification suite; one verdict line per check.
    Verify {
        /// Also run the classical conservation and closure checks.
        #[arg(long)]
        classical: bool,
    },
    /// Exact spectrum and degeneracies up to --emax (in units of omega).
    Spectrum,
    /// Write a wavefunction on a wedge grid.
    ExportWavefunction {
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        n: Option<String>,
        /// Grid radius (default 6/sqrt(omega)).
        #[arg(long = "r-max")]
        r_max: Option<String>,
        /// Fraction of each axis kept clear of the boundary (default 1e-3).
        #[arg(long)]
        margin: Option<String>,
    },
    /// Integrate the classical limit and report conservation and closure.
    Orbit {
        /// Initial condition: seed (generic bounded orbit) or equilibrium.
        #[arg(long)]
        start: Option<String>,
        #[arg(long)]
        r0: Option<String>,
        #[arg(long)]
        phi0: Option<String>,
        #[arg(long)]
        pr0: Option<String>,
        #[arg(long)]
        pphi0: Option<String>,
        /// Classical couplings are hbar * alpha and hbar * beta.
        #[arg(long)]
        hbar: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Rational, written a/b.
    #[arg(long, global = true)]
    pub alpha: Option<String>,
    /// Rational, written a/b.
    #[arg(long, global = true)]
    pub beta: Option<String>,
    #[arg(long, global = true)]
    pub omega: Option<String>,
    #[arg(long, global = true)]
    pub p: Option<String>,
    #[arg(long, global = true)]
    pub q: Option<String>,
    #[arg(long, global = true)]
    pub mmax: Option<String>,
    #[arg(long, global = true)]
    pub nmax: Option<String>,
    /// Energy cutoff in units of omega (rational).
    #[arg(long, global = true)]
    pub emax: Option<String>,
    /// N or NRxNPHI.
    #[arg(long, global = true)]
    pub grid: Option<String>,
    #[arg(long, global = true)]
    pub dt: Option<String>,
    #[arg(long = "t-end", global = true)]
    pub t_end: Option<String>,
    #[arg(long, global = true)]
    pub tol: Option<String>,
    /// csv or json.
    #[arg(long, global = true)]
    pub format: Option<String>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// key=value file; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

fn overlay(map: &mut BTreeMap<String, String>, key: &str, value: &Option<String>) {
    if let Some(v) = value {
        map.insert(key.to_string(), v.clone());
    }
}

/// Merges the config file (if any) with the flags.
pub fn settings_for(cli: &Cli) -> Result<Settings, CliError> {
    let c = &cli.common;
    let mut map = match &c.config {
        Some(path) => config::read_config(path)?,
        None => BTreeMap::new(),
    };
    for (k, v) in [
        ("alpha", &c.alpha),
        ("beta", &c.beta),
        ("omega", &c.omega),
        ("p", &c.p),
        ("q", &c.q),
        ("mmax", &c.mmax),
        ("nmax", &c.nmax),
        ("emax", &c.emax),
        ("grid", &c.grid),
        ("dt", &c.dt),
        ("t-end", &c.t_end),
        ("tol", &c.tol),
        ("format", &c.format),
    ] {
        overlay(&mut map, k, v);
    }
    if let Some(out) = &c.out {
        map.insert("out".into(), out.display().to_string());
    }
    match &cli.command {
        Command::Verify { classical } => {
            if *classical {
                map.insert("classical".into(), "true".into());
            }
        }
        Command::Spectrum => {}
        Command::ExportWavefunction { m, n, r_max, margin } => {
            overlay(&mut map, "m", m);
            overlay(&mut map, "n", n);
            overlay(&mut map, "r-max", r_max);
            overlay(&mut map, "margin", margin);
        }
        Command::Orbit { start, r0, phi0, pr0, pphi0, hbar } => {
            overlay(&mut map, "start", start);
            overlay(&mut map, "r0", r0);
            overlay(&mut map, "phi0", phi0);
            overlay(&mut map, "pr0", pr0);
            overlay(&mut map, "pphi0", pphi0);
            overlay(&mut map, "hbar", hbar);
        }
    }
    Settings::from_map(&map)
}

/// Caps the global rayon pool from the environment.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got '{v}'")))?;
    // A second initialisation in the same process keeps the first pool.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = configure_threads()
        .and_then(|_| settings_for(&cli))
        .and_then(|s| commands::dispatch(&cli.command, &s, stdout));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
