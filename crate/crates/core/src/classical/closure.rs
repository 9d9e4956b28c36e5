use super::dynamics::{hamiltonian, ClassicalParams, PhaseState};
use super::integrator::{integrate_with, IntegratorOptions, Trajectory};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosureOptions {
    /// Samples earlier than this many radial periods are ignored.
    pub initial_window: f64,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions { initial_window: 0.5 }
    }
}

/// Energy-based coordinate scales: with `v = sqrt(2H)`, radius `v/omega`,
/// the wedge angle, momentum `v` and angular momentum `v^2/omega`.
fn scales(traj: &Trajectory, cp: &ClassicalParams) -> [f64; 4] {
    let v = (2.0 * hamiltonian(traj.initial(), cp)).sqrt();
    let w = cp.omega_hat();
    [v / w, cp.wedge_angle(), v, v * v / w]
}

fn distance(a: &PhaseState, b: &PhaseState, sc: &[f64; 4]) -> f64 {
    let (a, b) = (a.to_array(), b.to_array());
    (0..4).map(|i| ((a[i] - b[i]) / sc[i]).powi(2)).sum::<f64>().sqrt()
}

/// Normalised phase-space distance to the initial state at the sample
/// nearest to `t`.
pub fn return_distance(traj: &Trajectory, cp: &ClassicalParams, t: f64) -> f64 {
    let sc = scales(traj, cp);
    let (_, s) = traj
        .samples
        .iter()
        .min_by(|a, b| (a.0 - t).abs().total_cmp(&(b.0 - t).abs()))
        .expect("trajectory is never empty");
    distance(s, traj.initial(), &sc)
}

/// Minimum normalised return distance over samples with `t_from <= t <= t_to`.
pub fn min_return_distance(traj: &Trajectory, cp: &ClassicalParams, t_from: f64, t_to: f64) -> f64 {
    let sc = scales(traj, cp);
    let s0 = traj.initial();
    traj.samples
        .iter()
        .filter(|(t, _)| *t >= t_from && *t <= t_to)
        .map(|(_, s)| distance(s, s0, &sc))
        .fold(f64::INFINITY, f64::min)
}

/// Closure metric with the default initial window; needs at least `2q`
/// radial periods of data.
pub fn closure_metric(traj: &Trajectory, cp: &ClassicalParams) -> Result<f64> {
    closure_metric_with(traj, cp, ClosureOptions::default())
}

pub fn closure_metric_with(traj: &Trajectory, cp: &ClassicalParams, opts: ClosureOptions) -> Result<f64> {
    let tr = cp.radial_period();
    let need = 2.0 * cp.q() as f64;
    let have = traj.t_end() / tr;
    if have < need * (1.0 - 1e-9) {
        return Err(Error::InsufficientSpan { have, need });
    }
    Ok(min_return_distance(traj, cp, opts.initial_window * tr, f64::INFINITY))
}

/// Richardson estimate of the order: final states at `dt`, `dt/2`, `dt/4`
/// give `log2(|y1 - y2| / |y2 - y4|)`. The drift guard is relaxed since the
/// coarsest run is deliberately inaccurate.
pub fn convergence_order(state0: &PhaseState, cp: &ClassicalParams, dt: f64, t_end: f64) -> Result<f64> {
    let finals = [1.0, 2.0, 4.0]
        .iter()
        .map(|d| integrate_with(state0, cp, dt / d, t_end, IntegratorOptions { drift_guard: 1e-2 }).map(|t| t.last().1.to_array()))
        .collect::<Result<Vec<_>>>()?;
    let diff = |a: &[f64; 4], b: &[f64; 4]| (0..4).map(|i| (a[i] - b[i]).powi(2)).sum::<f64>().sqrt();
    let coarse = diff(&finals[0], &finals[1]);
    let fine = diff(&finals[1], &finals[2]);
    if fine == 0.0 {
        return Err(Error::Overflow("differences at dt/2 and dt/4 vanish; increase dt".into()));
    }
    Ok((coarse / fine).log2())
}
