//! Settings from an optional `key=value` file overlaid by command-line flags.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use xsuperint_core::classical::{ClassicalParams, PhaseState};
use xsuperint_core::poly_core::{format_rational, parse_rational};
use xsuperint_core::spectral::WedgeGrid;
use xsuperint_core::{Params, Rational};

use crate::CliError;

pub const KEYS: &[&str] = &[
    "alpha", "beta", "omega", "p", "q", "mmax", "nmax", "emax", "grid", "r-max", "margin", "dt",
    "t-end", "tol", "format", "out", "m", "n", "hbar", "start", "r0", "phi0", "pr0", "pphi0",
    "classical",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Start {
    Seed,
    Equilibrium,
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub params: Params,
    pub mmax: u32,
    pub nmax: u32,
    pub emax: Rational,
    pub grid: WedgeGrid,
    pub dt: Option<f64>,
    pub t_end: Option<f64>,
    pub tol: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub m: u32,
    pub n: u32,
    pub hbar: f64,
    pub start: Start,
    pub r0: Option<f64>,
    pub phi0: Option<f64>,
    pub pr0: Option<f64>,
    pub pphi0: Option<f64>,
    pub classical: bool,
}

/// Parses `key=value` lines; `#` starts a comment, blank lines are skipped.
pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", i + 1)))?;
        let k = k.trim().replace('_', "-");
        if !KEYS.contains(&k.as_str()) {
            return Err(CliError::Usage(format!("config line {}: unknown key '{k}'", i + 1)));
        }
        map.insert(k, v.trim().to_string());
    }
    Ok(map)
}

pub fn read_config(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    parse_config_text(&text)
}

struct Raw<'a>(&'a BTreeMap<String, String>);

impl Raw<'_> {
    fn get<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T, CliError> {
        Ok(self.opt(key)?.unwrap_or(default))
    }

    fn opt<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        self.0
            .get(key)
            .map(|v| v.parse::<T>().map_err(|_| CliError::Usage(format!("invalid value for {key}: '{v}'"))))
            .transpose()
    }

    fn rational(&self, key: &str, default: &str) -> Result<Rational, CliError> {
        let v = self.0.get(key).map(String::as_str).unwrap_or(default);
        parse_rational(v).map_err(|e| CliError::Usage(format!("invalid value for {key}: {e}")))
    }
}

fn parse_grid(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("invalid grid '{s}': expected N or NRxNPHI"));
    let (a, b) = match s.split_once(['x', 'X']) {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a < 2 || b < 2 {
        return Err(bad());
    }
    Ok((a, b))
}

impl Settings {
    pub fn from_map(map: &BTreeMap<String, String>) -> Result<Self, CliError> {
        let raw = Raw(map);
        let alpha = raw.rational("alpha", "1")?;
        let beta = raw.rational("beta", "3")?;
        let omega: f64 = raw.get("omega", 1.0)?;
        let p: u32 = raw.get("p", 1)?;
        let q: u32 = raw.get("q", 1)?;
        let params = Params::new(alpha, beta, omega, p, q).map_err(|e| CliError::Usage(e.to_string()))?;

        let (nr, nphi) = parse_grid(map.get("grid").map(String::as_str).unwrap_or("200"))?;
        let mut grid = WedgeGrid::default_for(&params).with_size(nr, nphi);
        if let Some(r) = raw.opt::<f64>("r-max")? {
            grid.r_max = r;
        }
        if let Some(m) = raw.opt::<f64>("margin")? {
            grid.margin = m;
        }
        grid.validate(&params).map_err(|e| CliError::Usage(format!("grid: {e}")))?;

        let format = match map.get("format").map(String::as_str).unwrap_or("csv") {
            "csv" => Format::Csv,
            "json" => Format::Json,
            other => return Err(CliError::Usage(format!("unknown format '{other}' (csv|json)"))),
        };
        let start = match map.get("start").map(String::as_str).unwrap_or("seed") {
            "seed" => Start::Seed,
            "equilibrium" => Start::Equilibrium,
            other => return Err(CliError::Usage(format!("unknown start '{other}' (seed|equilibrium)"))),
        };
        let s = Settings {
            params,
            mmax: raw.get("mmax", 4)?,
            nmax: raw.get("nmax", 8)?,
            emax: raw.rational("emax", "20")?,
            grid,
            dt: raw.opt("dt")?,
            t_end: raw.opt("t-end")?,
            tol: raw.get("tol", 1e-9)?,
            format,
            out: map.get("out").map(PathBuf::from),
            m: raw.get("m", 0)?,
            n: raw.get("n", 1)?,
            hbar: raw.get("hbar", 1.0)?,
            start,
            r0: raw.opt("r0")?,
            phi0: raw.opt("phi0")?,
            pr0: raw.opt("pr0")?,
            pphi0: raw.opt("pphi0")?,
            classical: raw.get("classical", false)?,
        };
        if s.nmax == 0 {
            return Err(CliError::Usage("nmax must be at least 1".into()));
        }
        if s.tol.is_nan() || s.tol <= 0.0 {
            return Err(CliError::Usage("tol must be positive".into()));
        }
        if let Some(dt) = s.dt {
            if !(dt > 0.0 && dt.is_finite()) {
                return Err(CliError::Usage("dt must be positive".into()));
            }
        }
        if let Some(t) = s.t_end {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(CliError::Usage("t-end must be non-negative".into()));
            }
        }
        Ok(s)
    }

    pub fn classical_params(&self) -> Result<ClassicalParams, CliError> {
        ClassicalParams::from_quantum(&self.params, self.hbar).map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn initial_state(&self, cp: &ClassicalParams) -> PhaseState {
        let base = match self.start {
            Start::Seed => cp.default_seed(),
            Start::Equilibrium => cp.equilibrium(),
        };
        PhaseState {
            r: self.r0.unwrap_or(base.r),
            phi: self.phi0.unwrap_or(base.phi),
            p_r: self.pr0.unwrap_or(base.p_r),
            p_phi: self.pphi0.unwrap_or(base.p_phi),
        }
    }

    /// `alpha=.., beta=..` with rationals as `a/b`.
    pub fn describe(&self) -> String {
        let p = &self.params;
        format!(
            "alpha={}, beta={}, omega={}, p={}, q={}",
            format_rational(p.alpha()),
            format_rational(p.beta()),
            p.omega(),
            p.p(),
            p.q()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_text() {
        let m = parse_config_text("# c\nalpha = 3/2\n\nt_end=5 # trailing\n").unwrap();
        assert_eq!(m["alpha"], "3/2");
        assert_eq!(m["t-end"], "5");
        assert!(parse_config_text("bogus=1").is_err());
        assert!(parse_config_text("alpha").is_err());
    }

    #[test]
    fn grid_spec() {
        assert_eq!(parse_grid("30x40").unwrap(), (30, 40));
        assert_eq!(parse_grid("25").unwrap(), (25, 25));
        assert!(parse_grid("1x5").is_err());
    }

    #[test]
    fn equal_parameters_are_usage_errors() {
        let mut m = BTreeMap::new();
        m.insert("alpha".to_string(), "2".to_string());
        m.insert("beta".to_string(), "2".to_string());
        assert!(matches!(Settings::from_map(&m), Err(CliError::Usage(_))));
    }
}
