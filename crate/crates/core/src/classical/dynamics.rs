use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::poly_core::rational::to_f64;

pub const DEFAULT_STEPS_PER_PERIOD: u32 = 128;

/// Classical couplings `omega_hat`, `alpha_hat`, `beta_hat` and `k = p/q`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassicalParams {
    omega_hat: f64,
    alpha_hat: f64,
    beta_hat: f64,
    p: u32,
    q: u32,
}

impl ClassicalParams {
    pub fn new(omega_hat: f64, alpha_hat: f64, beta_hat: f64, p: u32, q: u32) -> Result<Self> {
        for (name, v) in [("omega_hat", omega_hat), ("alpha_hat", alpha_hat), ("beta_hat", beta_hat)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParams(format!("{name} must be positive and finite, got {v}")));
            }
        }
        if p == 0 || q == 0 || num_integer::gcd(p, q) != 1 {
            return Err(Error::InvalidParams(format!("p={p}, q={q} must be coprime positive integers")));
        }
        Ok(ClassicalParams { omega_hat, alpha_hat, beta_hat, p, q })
    }

    /// `alpha_hat = hbar * alpha`, `beta_hat = hbar * beta`, `omega_hat = omega`.
    pub fn from_quantum(params: &Params, hbar: f64) -> Result<Self> {
        Self::new(
            params.omega(),
            hbar * to_f64(params.alpha()).abs(),
            hbar * to_f64(params.beta()).abs(),
            params.p(),
            params.q(),
        )
    }

    pub fn omega_hat(&self) -> f64 {
        self.omega_hat
    }

    pub fn alpha_hat(&self) -> f64 {
        self.alpha_hat
    }

    pub fn beta_hat(&self) -> f64 {
        self.beta_hat
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn k(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    /// `pi / (2k)`
    pub fn wedge_angle(&self) -> f64 {
        FRAC_PI_2 / self.k()
    }

    /// Period of the radial oscillation, `pi / omega_hat`.
    pub fn radial_period(&self) -> f64 {
        std::f64::consts::PI / self.omega_hat
    }

    /// Default fixed step: 128 steps per radial period.
    pub fn default_dt(&self) -> f64 {
        self.radial_period() / DEFAULT_STEPS_PER_PERIOD as f64
    }

    /// Minimiser of the angular potential: `tan(k phi) = sqrt(alpha_hat / beta_hat)`.
    pub fn angular_minimum(&self) -> f64 {
        (self.alpha_hat / self.beta_hat).sqrt().atan() / self.k()
    }

    /// Minimum of `L1` over the wedge: `(alpha_hat + beta_hat)^2`.
    pub fn l1_minimum(&self) -> f64 {
        (self.alpha_hat + self.beta_hat).powi(2)
    }

    /// The stationary point: angular minimum and the radius minimising
    /// `omega^2 r^2 / 2 + k^2 L1 / (2 r^2)`.
    pub fn equilibrium(&self) -> PhaseState {
        let r2 = self.k() * self.l1_minimum().sqrt() / self.omega_hat;
        PhaseState { r: r2.sqrt(), phi: self.angular_minimum(), p_r: 0.0, p_phi: 0.0 }
    }

    /// `omega_hat * k * (alpha_hat + beta_hat)`
    pub fn minimum_energy(&self) -> f64 {
        self.omega_hat * self.k() * (self.alpha_hat + self.beta_hat)
    }

    /// A generic bounded initial condition away from the walls.
    pub fn default_seed(&self) -> PhaseState {
        let eq = self.equilibrium();
        PhaseState {
            r: 1.3 * eq.r,
            phi: 0.75 * eq.phi + 0.25 * 0.5 * self.wedge_angle(),
            p_r: 0.4 * self.omega_hat * eq.r,
            p_phi: 0.3 * self.k() * (self.alpha_hat + self.beta_hat),
        }
    }

    pub(crate) fn angular_potential(&self, phi: f64) -> f64 {
        let (s, c) = (self.k() * phi).sin_cos();
        self.alpha_hat.powi(2) / (s * s) + self.beta_hat.powi(2) / (c * c)
    }

    /// d/dphi of [`Self::angular_potential`].
    pub(crate) fn angular_force(&self, phi: f64) -> f64 {
        let k = self.k();
        let (s, c) = (k * phi).sin_cos();
        2.0 * k * (-self.alpha_hat.powi(2) * c / (s * s * s) + self.beta_hat.powi(2) * s / (c * c * c))
    }

    pub fn in_wedge(&self, state: &PhaseState) -> bool {
        state.r > 0.0 && state.phi > 0.0 && state.phi < self.wedge_angle() && state.is_finite()
    }

    fn check(&self, state: &PhaseState) -> Result<()> {
        if self.in_wedge(state) {
            Ok(())
        } else {
            Err(Error::Domain(format!("phase state {state:?} is outside the wedge")))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PhaseState {
    pub r: f64,
    pub phi: f64,
    pub p_r: f64,
    pub p_phi: f64,
}

impl PhaseState {
    pub fn new(r: f64, phi: f64, p_r: f64, p_phi: f64) -> Self {
        PhaseState { r, phi, p_r, p_phi }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.r, self.phi, self.p_r, self.p_phi]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        PhaseState { r: a[0], phi: a[1], p_r: a[2], p_phi: a[3] }
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }

    /// Same point with both momenta reversed.
    pub fn reversed(self) -> Self {
        PhaseState { p_r: -self.p_r, p_phi: -self.p_phi, ..self }
    }
}

/// `(p_r^2 + p_phi^2 / r^2) / 2 + omega^2 r^2 / 2 + k^2 W(phi) / (2 r^2)`
pub fn h_classical(state: &PhaseState, cp: &ClassicalParams) -> Result<f64> {
    cp.check(state)?;
    Ok(hamiltonian(state, cp))
}

/// `p_phi^2 / k^2 + alpha_hat^2 / sin^2(k phi) + beta_hat^2 / cos^2(k phi)`
pub fn l1_classical(state: &PhaseState, cp: &ClassicalParams) -> Result<f64> {
    cp.check(state)?;
    Ok(l1(state, cp))
}

pub(crate) fn hamiltonian(s: &PhaseState, cp: &ClassicalParams) -> f64 {
    let r2 = s.r * s.r;
    let k = cp.k();
    0.5 * (s.p_r * s.p_r + s.p_phi * s.p_phi / r2)
        + 0.5 * cp.omega_hat.powi(2) * r2
        + k * k * cp.angular_potential(s.phi) / (2.0 * r2)
}

pub(crate) fn l1(s: &PhaseState, cp: &ClassicalParams) -> f64 {
    let k = cp.k();
    s.p_phi * s.p_phi / (k * k) + cp.angular_potential(s.phi)
}

/// Hamilton's equations.
pub(crate) fn vector_field(y: &[f64; 4], cp: &ClassicalParams) -> [f64; 4] {
    let [r, phi, p_r, p_phi] = *y;
    let k2 = cp.k().powi(2);
    let r2 = r * r;
    let r3 = r2 * r;
    [
        p_r,
        p_phi / r2,
        (p_phi * p_phi + k2 * cp.angular_potential(phi)) / r3 - cp.omega_hat.powi(2) * r,
        -k2 * cp.angular_force(phi) / (2.0 * r2),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp() -> ClassicalParams {
        ClassicalParams::new(1.0, 1.0, 3.0, 3, 2).unwrap()
    }

    #[test]
    fn equilibrium_is_stationary() {
        let cp = cp();
        let eq = cp.equilibrium();
        let f = vector_field(&eq.to_array(), &cp);
        assert!(f.iter().all(|v| v.abs() < 1e-12), "{f:?}");
        assert!((l1(&eq, &cp) - cp.l1_minimum()).abs() < 1e-12);
        assert!((hamiltonian(&eq, &cp) - cp.minimum_energy()).abs() < 1e-12);
    }

    #[test]
    fn force_matches_finite_difference() {
        let cp = cp();
        let phi = 0.4;
        let h = 1e-6;
        let fd = (cp.angular_potential(phi + h) - cp.angular_potential(phi - h)) / (2.0 * h);
        assert!((fd - cp.angular_force(phi)).abs() < 1e-6 * fd.abs().max(1.0));
    }

    #[test]
    fn wall_is_a_domain_error() {
        let cp = cp();
        assert!(h_classical(&PhaseState::new(1.0, 0.0, 0.0, 0.0), &cp).is_err());
        assert!(l1_classical(&PhaseState::new(1.0, cp.wedge_angle(), 0.0, 0.0), &cp).is_err());
    }
}
