//! Grid export: CSV `r,phi,psi` plus a JSON metadata sidecar.

use std::io::Write;

use serde::Serialize;

use super::wavefunction::{Wavefunction, WedgeGrid};
use crate::error::Result;
use crate::poly_core::format_rational;

/// Floats with 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sidecar {
    pub m: u32,
    pub n: u32,
    pub alpha: String,
    pub beta: String,
    pub omega: f64,
    pub p: u32,
    pub q: u32,
    pub energy: f64,
    pub energy_over_omega: String,
}

pub fn sidecar(wf: &Wavefunction) -> Sidecar {
    let p = &wf.params;
    Sidecar {
        m: wf.state.m,
        n: wf.state.n,
        alpha: format_rational(p.alpha()),
        beta: format_rational(p.beta()),
        omega: p.omega(),
        p: p.p(),
        q: p.q(),
        energy: wf.energy(),
        energy_over_omega: format_rational(&wf.state.energy_over_omega(p)),
    }
}

/// Writes `r,phi,psi` rows (header first, LF endings).
pub fn write_grid_csv<W: Write>(wf: &Wavefunction, grid: &WedgeGrid, mut out: W) -> Result<()> {
    grid.validate(&wf.params)?;
    writeln!(out, "r,phi,psi")?;
    let phis = grid.phi_values(&wf.params);
    for r in grid.r_values() {
        for &phi in &phis {
            let psi = wf.eval(r, phi)?;
            writeln!(out, "{},{},{}", fmt_f64(r), fmt_f64(phi), fmt_f64(psi))?;
        }
    }
    Ok(())
}

pub fn write_sidecar_json<W: Write>(wf: &Wavefunction, mut out: W) -> Result<()> {
    let s = serde_json::to_string_pretty(&sidecar(wf)).map_err(|e| crate::Error::Io(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}
