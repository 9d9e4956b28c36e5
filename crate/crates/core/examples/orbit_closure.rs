//! Return distance of a classical orbit after each radial period, for
//! rational k and an irrational surrogate.

use xsuperint_core::classical::{integrate, min_return_distance, return_distance, ClassicalParams};

fn main() -> xsuperint_core::Result<()> {
    for (p, q) in [(1, 1), (2, 1), (1, 2), (3, 2), (1393, 985)] {
        let cp = ClassicalParams::new(1.0, 1.0, 3.0, p, q)?;
        let tr = cp.radial_period();
        let traj = integrate(&cp.default_seed(), &cp, cp.default_dt(), 40.0 * tr)?;
        let per_period: Vec<String> =
            (1..=4).map(|j| format!("{:.2e}", return_distance(&traj, &cp, j as f64 * tr))).collect();
        println!(
            "k = {p}/{q}: after 1..4 periods {}; min over 40 periods {:.2e}",
            per_period.join(", "),
            min_return_distance(&traj, &cp, 0.5 * tr, f64::INFINITY)
        );
    }
    Ok(())
}
