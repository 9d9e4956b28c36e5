//! Gragg-Bulirsch-Stoer extrapolation of the modified midpoint rule with
//! the fixed substep sequence 2, 4, 6, 8, 10 (order 10), at a fixed macro step.

use serde::Serialize;

use super::dynamics::{hamiltonian, l1, vector_field, ClassicalParams, PhaseState};
use crate::error::{Error, Result};

pub const INTEGRATOR_ORDER: u32 = 2 * SUBSTEPS.len() as u32;
const SUBSTEPS: [usize; 5] = [2, 4, 6, 8, 10];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegratorOptions {
    /// Abort when the relative energy drift exceeds this.
    pub drift_guard: f64,
}

impl Default for IntegratorOptions {
    fn default() -> Self {
        IntegratorOptions { drift_guard: 1e-6 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Trajectory {
    pub samples: Vec<(f64, PhaseState)>,
    pub dt: f64,
    pub order: u32,
}

impl Trajectory {
    pub fn initial(&self) -> &PhaseState {
        &self.samples[0].1
    }

    pub fn last(&self) -> &(f64, PhaseState) {
        self.samples.last().expect("trajectory is never empty")
    }

    pub fn t_end(&self) -> f64 {
        self.last().0
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Largest relative deviation of H from its initial value.
    pub fn energy_drift(&self, cp: &ClassicalParams) -> f64 {
        self.max_relative_drift(|s| hamiltonian(s, cp))
    }

    /// Largest relative deviation of L1 from its initial value.
    pub fn l1_drift(&self, cp: &ClassicalParams) -> f64 {
        self.max_relative_drift(|s| l1(s, cp))
    }

    fn max_relative_drift(&self, f: impl Fn(&PhaseState) -> f64) -> f64 {
        let f0 = f(self.initial());
        self.samples
            .iter()
            .map(|(_, s)| ((f(s) - f0) / f0).abs())
            .fold(0.0, f64::max)
    }
}

pub fn integrate(state0: &PhaseState, cp: &ClassicalParams, dt: f64, t_end: f64) -> Result<Trajectory> {
    integrate_with(state0, cp, dt, t_end, IntegratorOptions::default())
}

/// Fixed steps of `dt` up to `t_end`; a final shorter step lands exactly on
/// `t_end`. Every step's result is recorded.
pub fn integrate_with(
    state0: &PhaseState,
    cp: &ClassicalParams,
    dt: f64,
    t_end: f64,
    opts: IntegratorOptions,
) -> Result<Trajectory> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidParams(format!("dt must be positive, got {dt}")));
    }
    if !(t_end >= 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidParams(format!("t_end must be non-negative, got {t_end}")));
    }
    if !cp.in_wedge(state0) {
        return Err(Error::Domain(format!("initial state {state0:?} is outside the wedge")));
    }
    let full = (t_end / dt * (1.0 + 1e-12)).floor() as usize;
    let rest = t_end - full as f64 * dt;
    let tail = rest > 1e-9 * dt;
    let mut samples = Vec::with_capacity(full + 1 + tail as usize);
    samples.push((0.0, *state0));
    let e0 = hamiltonian(state0, cp);
    let mut y = state0.to_array();
    let mut step_to = |h: f64, t: f64, y: &mut [f64; 4]| -> Result<()> {
        *y = gbs_step(y, h, cp);
        let s = PhaseState::from_array(*y);
        if !cp.in_wedge(&s) {
            return Err(Error::WedgeExit { t });
        }
        let drift = ((hamiltonian(&s, cp) - e0) / e0).abs();
        if drift.is_nan() || drift > opts.drift_guard {
            return Err(Error::StepSizeTooLarge { drift });
        }
        samples.push((t, s));
        Ok(())
    };
    for i in 1..=full {
        step_to(dt, i as f64 * dt, &mut y)?;
    }
    if tail {
        step_to(rest, t_end, &mut y)?;
    }
    Ok(Trajectory { samples, dt, order: INTEGRATOR_ORDER })
}

fn axpy(y: &[f64; 4], a: f64, x: &[f64; 4]) -> [f64; 4] {
    [y[0] + a * x[0], y[1] + a * x[1], y[2] + a * x[2], y[3] + a * x[3]]
}

fn modified_midpoint(y: &[f64; 4], big_h: f64, n: usize, cp: &ClassicalParams) -> [f64; 4] {
    let h = big_h / n as f64;
    let mut z0 = *y;
    let mut z1 = axpy(y, h, &vector_field(y, cp));
    for _ in 1..n {
        let z2 = axpy(&z0, 2.0 * h, &vector_field(&z1, cp));
        z0 = z1;
        z1 = z2;
    }
    let f = vector_field(&z1, cp);
    let mut out = [0.0; 4];
    for i in 0..4 {
        out[i] = 0.5 * (z0[i] + z1[i] + h * f[i]);
    }
    out
}

fn gbs_step(y: &[f64; 4], h: f64, cp: &ClassicalParams) -> [f64; 4] {
    // Aitken-Neville extrapolation to h -> 0 in powers of h^2.
    let mut prev: Vec<[f64; 4]> = Vec::new();
    for (j, &nj) in SUBSTEPS.iter().enumerate() {
        let mut row = Vec::with_capacity(j + 1);
        row.push(modified_midpoint(y, h, nj, cp));
        for k in 1..=j {
            let ratio = (nj as f64 / SUBSTEPS[j - k] as f64).powi(2);
            let (a, b) = (row[k - 1], prev[k - 1]);
            let mut t = [0.0; 4];
            for i in 0..4 {
                t[i] = a[i] + (a[i] - b[i]) / (ratio - 1.0);
            }
            row.push(t);
        }
        prev = row;
    }
    *prev.last().unwrap()
}
