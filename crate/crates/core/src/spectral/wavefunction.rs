//! Closed-form bound states `Psi_{m,n}(r, phi)` evaluated in floating point.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::operator_algebra::PotentialForm;
use crate::params::{Params, QuantumState};
use crate::poly_core::poly::horner;
use crate::poly_core::rational::to_f64;
use crate::poly_core::{laguerre_poly, xjacobi_eigen, Poly};

/// Largest `omega r^2` for which the Gaussian factor stays comfortably normal.
const MAX_Y: f64 = 1400.0;

/// Sample grid on the open wedge `0 < r <= r_max`, `0 < phi < pi/(2k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WedgeGrid {
    pub nr: usize,
    pub nphi: usize,
    pub r_max: f64,
    /// Fraction of each span kept clear of the singular boundary.
    pub margin: f64,
}

impl WedgeGrid {
    /// 200 x 200 points, `r_max = 6 / sqrt(omega)`, margin `1e-3`.
    pub fn default_for(params: &Params) -> Self {
        WedgeGrid {
            nr: 200,
            nphi: 200,
            r_max: 6.0 / params.omega().sqrt(),
            margin: 1e-3,
        }
    }

    pub fn with_size(mut self, nr: usize, nphi: usize) -> Self {
        self.nr = nr;
        self.nphi = nphi;
        self
    }

    pub fn validate(&self, params: &Params) -> Result<()> {
        if self.nr < 2 || self.nphi < 2 {
            return Err(Error::Domain("grid needs at least 2 points per axis".into()));
        }
        if !(self.margin > 0.0 && self.margin < 0.5) {
            return Err(Error::Domain(format!("grid margin {} must lie in (0, 1/2)", self.margin)));
        }
        if !(self.r_max.is_finite() && self.r_max > 0.0) {
            return Err(Error::Domain(format!("r_max = {} must be positive", self.r_max)));
        }
        if params.omega() * self.r_max * self.r_max > MAX_Y {
            return Err(Error::Overflow(format!(
                "omega r_max^2 = {:e} exceeds {MAX_Y}",
                params.omega() * self.r_max * self.r_max
            )));
        }
        Ok(())
    }

    pub fn r_values(&self) -> Vec<f64> {
        let e = self.margin;
        (0..self.nr)
            .map(|i| self.r_max * (e + (1.0 - e) * i as f64 / (self.nr - 1) as f64))
            .collect()
    }

    pub fn phi_values(&self, params: &Params) -> Vec<f64> {
        let span = wedge_angle(params);
        let e = self.margin;
        (0..self.nphi)
            .map(|j| span * (e + (1.0 - 2.0 * e) * j as f64 / (self.nphi - 1) as f64))
            .collect()
    }
}

/// Opening angle `pi / (2k)` of the wedge.
pub fn wedge_angle(params: &Params) -> f64 {
    FRAC_PI_2 * params.q() as f64 / params.p() as f64
}

fn deriv(c: &[f64]) -> Vec<f64> {
    c.iter().enumerate().skip(1).map(|(i, v)| i as f64 * v).collect()
}

/// Value and first two derivatives of a polynomial.
fn poly3(c: &[f64], d1: &[f64], d2: &[f64], x: f64) -> [f64; 3] {
    [horner(c, x), horner(d1, x), horner(d2, x)]
}

/// Value of `Psi` and its partial derivatives at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PsiJet {
    pub psi: f64,
    pub dr: f64,
    pub drr: f64,
    pub dphi: f64,
    pub dphiphi: f64,
}

/// Precomputed float data for one state.
#[derive(Clone, Debug)]
pub struct Wavefunction {
    pub state: QuantumState,
    pub params: Params,
    k: f64,
    alpha: f64,
    beta: f64,
    b: f64,
    ell: f64,
    energy: f64,
    angular: [Vec<f64>; 3],
    radial: [Vec<f64>; 3],
}

impl Wavefunction {
    pub fn new(state: QuantumState, params: &Params) -> Result<Self> {
        let p = xjacobi_eigen(state.n as usize, params.alpha(), params.beta())?;
        let ell = state.ell(params);
        let l = laguerre_poly(state.m as usize, &ell);
        let three = |p: &Poly| {
            let c = p.to_f64_coeffs();
            let d1 = deriv(&c);
            let d2 = deriv(&d1);
            [c, d1, d2]
        };
        Ok(Wavefunction {
            state,
            params: params.clone(),
            k: to_f64(&params.k()),
            alpha: to_f64(params.alpha()),
            beta: to_f64(params.beta()),
            b: to_f64(&params.b()),
            ell: to_f64(&ell),
            energy: params.omega() * to_f64(&state.energy_over_omega(params)),
            angular: three(&p),
            radial: three(&l),
        })
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn in_wedge(&self, r: f64, phi: f64) -> bool {
        r > 0.0 && phi > 0.0 && phi < wedge_angle(&self.params) && r.is_finite()
    }

    fn check(&self, r: f64, phi: f64) -> Result<()> {
        if self.in_wedge(r, phi) {
            Ok(())
        } else {
            Err(Error::Domain(format!("(r, phi) = ({r}, {phi}) is outside the open wedge")))
        }
    }

    /// `Psi(r, phi)`; the angular gauge uses positive real roots of `1 -/+ x`.
    pub fn eval(&self, r: f64, phi: f64) -> Result<f64> {
        self.check(r, phi)?;
        let (rad, _) = self.radial_jet(r);
        let (ang, _) = self.angular_jet(phi);
        Ok(rad[0] * ang[0])
    }

    /// `R(r)` and `(R, R', R'')`, plus `y`.
    fn radial_jet(&self, r: f64) -> ([f64; 3], f64) {
        let w = self.params.omega();
        let y = w * r * r;
        let [l, l1, l2] = poly3(&self.radial[0], &self.radial[1], &self.radial[2], y);
        let g = (0.5 * self.ell * y.ln() - 0.5 * y).exp();
        let h = 0.5 * self.ell / y - 0.5;
        let h2 = h * h - 0.5 * self.ell / (y * y);
        let yv = g * l;
        let y1 = g * (l1 + h * l);
        let y2 = g * (l2 + 2.0 * h * l1 + h2 * l);
        ([yv, y1 * 2.0 * w * r, y2 * 4.0 * w * w * r * r + y1 * 2.0 * w], y)
    }

    /// `Phi(phi)` and `(Phi, Phi', Phi'')`, plus `x`.
    fn angular_jet(&self, phi: f64) -> ([f64; 3], f64) {
        let k = self.k;
        let (s, c) = (k * phi).sin_cos();
        let one_minus = 2.0 * s * s;
        let one_plus = 2.0 * c * c;
        let x = c * c - s * s;
        let a = 0.5 * self.alpha + 0.25;
        let cc = 0.5 * self.beta + 0.25;
        let g = one_minus.powf(a) * one_plus.powf(cc) / (x - self.b);
        let h1 = -a / one_minus + cc / one_plus - 1.0 / (x - self.b);
        let h1p = -a / (one_minus * one_minus) - cc / (one_plus * one_plus)
            + 1.0 / ((x - self.b) * (x - self.b));
        let [p, p1, p2] = poly3(&self.angular[0], &self.angular[1], &self.angular[2], x);
        let xv = g * p;
        let x1 = g * (p1 + h1 * p);
        let x2 = g * (p2 + 2.0 * h1 * p1 + (h1 * h1 + h1p) * p);
        // dx/dphi = -2k sin(2k phi), d2x/dphi2 = -4k^2 x
        let dx = -4.0 * k * s * c;
        let ddx = -4.0 * k * k * x;
        ([xv, x1 * dx, x2 * dx * dx + x1 * ddx], x)
    }

    /// `Psi` with analytic first and second partials.
    pub fn jet(&self, r: f64, phi: f64) -> Result<PsiJet> {
        self.check(r, phi)?;
        let (rad, _) = self.radial_jet(r);
        let (ang, _) = self.angular_jet(phi);
        Ok(PsiJet {
            psi: rad[0] * ang[0],
            dr: rad[1] * ang[0],
            drr: rad[2] * ang[0],
            dphi: rad[0] * ang[1],
            dphiphi: rad[0] * ang[2],
        })
    }

    /// Angular potential `V` (multiplying `k^2 / (2 r^2)`).
    pub fn potential(&self, phi: f64, form: PotentialForm) -> f64 {
        angular_potential_f64(self.alpha, self.beta, self.b, self.k, phi, form)
    }

    /// `(H - E) Psi` from the analytic jet.
    pub fn residual_at(&self, r: f64, phi: f64, energy: f64, form: PotentialForm) -> Result<(f64, f64)> {
        let j = self.jet(r, phi)?;
        let w = self.params.omega();
        let lap = j.drr + j.dr / r + j.dphiphi / (r * r);
        let v = self.k * self.k / (2.0 * r * r) * self.potential(phi, form);
        let h = -0.5 * lap + 0.5 * w * w * r * r * j.psi + v * j.psi;
        Ok((h - energy * j.psi, j.psi))
    }
}

/// `(alpha^2-1/4)/sin^2(k phi) + (beta^2-1/4)/cos^2(k phi) + deformation(cos 2k phi)`.
pub fn angular_potential_f64(alpha: f64, beta: f64, b: f64, k: f64, phi: f64, form: PotentialForm) -> f64 {
    let (s, c) = (k * phi).sin_cos();
    let x = c * c - s * s;
    let base = (alpha * alpha - 0.25) / (s * s) + (beta * beta - 0.25) / (c * c);
    let deform = match form {
        PotentialForm::Consistent => 8.0 * (1.0 - b * x) / ((b - x) * (b - x)),
        PotentialForm::Printed => 4.0 * (1.0 + b * x) / ((b + x) * (b + x)),
    };
    base + deform
}
