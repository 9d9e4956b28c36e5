//! Schrodinger residuals `(H - E) Psi` on a wedge grid.

use rayon::prelude::*;

use super::wavefunction::{Wavefunction, WedgeGrid};
use crate::error::{Error, Result};
use crate::operator_algebra::PotentialForm;

/// Options for [`schrodinger_residual_with`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResidualOptions {
    /// Energy used in `(H - E)`; `None` means the quantized `E_{m,n}`.
    pub energy: Option<f64>,
    pub potential: PotentialForm,
}

impl Default for ResidualOptions {
    fn default() -> Self {
        ResidualOptions {
            energy: None,
            potential: PotentialForm::Consistent,
        }
    }
}

fn reduce(rows: Vec<(f64, f64)>) -> Result<f64> {
    let (res, psi) = rows
        .into_iter()
        .fold((0.0f64, 0.0f64), |(a, b), (r, p)| (a.max(r), b.max(p)));
    if !res.is_finite() || !psi.is_finite() {
        return Err(Error::Overflow("non-finite wavefunction or residual on grid".into()));
    }
    if psi == 0.0 {
        return Err(Error::Overflow("wavefunction underflows to zero on the whole grid".into()));
    }
    Ok(res / psi)
}

/// `max |(H - E) Psi| / max |Psi|` with analytic derivatives.
pub fn schrodinger_residual(wf: &Wavefunction, grid: &WedgeGrid) -> Result<f64> {
    schrodinger_residual_with(wf, grid, ResidualOptions::default())
}

pub fn schrodinger_residual_with(wf: &Wavefunction, grid: &WedgeGrid, opts: ResidualOptions) -> Result<f64> {
    grid.validate(&wf.params)?;
    let energy = opts.energy.unwrap_or(wf.energy());
    let rs = grid.r_values();
    let phis = grid.phi_values(&wf.params);
    let rows = rs
        .par_iter()
        .map(|&r| {
            phis.iter().try_fold((0.0f64, 0.0f64), |(a, b), &phi| {
                let (res, psi) = wf.residual_at(r, phi, energy, opts.potential)?;
                Ok((a.max(res.abs()), b.max(psi.abs())))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    reduce(rows)
}

/// Finite-difference cross-check: fourth-order central differences with
/// relative steps `h` in `r` and `phi`. Independent of the analytic jet.
pub const FD_STEP: f64 = 2e-3;

pub fn fd_residual(wf: &Wavefunction, grid: &WedgeGrid, h: f64) -> Result<f64> {
    grid.validate(&wf.params)?;
    let energy = wf.energy();
    let w = wf.params.omega();
    let k = crate::poly_core::rational::to_f64(&wf.params.k());
    let rs = grid.r_values();
    let phis = grid.phi_values(&wf.params);
    let span = super::wavefunction::wedge_angle(&wf.params);
    let rows = rs
        .par_iter()
        .map(|&r| {
            phis.iter().try_fold((0.0f64, 0.0f64), |(a, b), &phi| {
                // Steps scale with the distance to the nearest singular boundary.
                let hr = h * r;
                let hp = h * phi.min(span - phi);
                let f = |dr: f64, dp: f64| wf.eval(r + dr, phi + dp);
                let c = f(0.0, 0.0)?;
                let (r1p, r1m, r2p, r2m) = (f(hr, 0.0)?, f(-hr, 0.0)?, f(2.0 * hr, 0.0)?, f(-2.0 * hr, 0.0)?);
                let (p1p, p1m, p2p, p2m) = (f(0.0, hp)?, f(0.0, -hp)?, f(0.0, 2.0 * hp)?, f(0.0, -2.0 * hp)?);
                let second = |a1: f64, b1: f64, a2: f64, b2: f64, h: f64| {
                    (-a2 + 16.0 * a1 - 30.0 * c + 16.0 * b1 - b2) / (12.0 * h * h)
                };
                let drr = second(r1p, r1m, r2p, r2m, hr);
                let dr = (-r2p + 8.0 * r1p - 8.0 * r1m + r2m) / (12.0 * hr);
                let dpp = second(p1p, p1m, p2p, p2m, hp);
                let lap = drr + dr / r + dpp / (r * r);
                let v = k * k / (2.0 * r * r) * wf.potential(phi, PotentialForm::Consistent);
                let res = -0.5 * lap + 0.5 * w * w * r * r * c + v * c - energy * c;
                Ok((a.max(res.abs()), b.max(c.abs())))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    reduce(rows)
}
