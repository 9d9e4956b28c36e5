use std::io::Write;

use super::dynamics::{hamiltonian, l1, ClassicalParams};
use super::integrator::Trajectory;
use crate::error::Result;
use crate::spectral::export::fmt_f64;

/// CSV with columns `t,r,phi,p_r,p_phi,H,L1`.
pub fn write_trajectory_csv<W: Write>(traj: &Trajectory, cp: &ClassicalParams, mut out: W) -> Result<()> {
    writeln!(out, "t,r,phi,p_r,p_phi,H,L1")?;
    for (t, s) in &traj.samples {
        let row = [*t, s.r, s.phi, s.p_r, s.p_phi, hamiltonian(s, cp), l1(s, cp)];
        let cells: Vec<String> = row.iter().map(|v| fmt_f64(*v)).collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}
