use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use num_traits::Zero;
use serde_json::json;
use xsuperint_core::classical::{
    closure_metric, convergence_order, integrate, write_trajectory_csv, ClassicalParams, Trajectory,
};
use xsuperint_core::ladders::{l1_noncommutation, ladder_report, parity_check, xi_action, Direction};
use xsuperint_core::operator_algebra::{build_t, eigenvalue};
use xsuperint_core::poly_core::{format_rational, reconcile_report, xjacobi_eigen};
use xsuperint_core::spectral::export::{fmt_f64, sidecar, write_grid_csv, write_sidecar_json};
use xsuperint_core::spectral::residual::FD_STEP;
use xsuperint_core::spectral::{
    angular_gram, degeneracy_table, fd_residual, ladder_numeric_check, schrodinger_residual, Wavefunction,
};
use xsuperint_core::{QuantumState, RatFunc, Report, Verdict};

use crate::config::{Format, Settings};
use crate::{CliError, Command, EXIT_FAIL, EXIT_PASS};

pub const DRIFT_TOL: f64 = 1e-8;
pub const CLOSURE_TOL: f64 = 1e-6;
pub const GRAM_TOL: f64 = 1e-12;
pub const FD_TOL: f64 = 1e-5;
pub const PARITY_NMAX: usize = 8;
/// Radial periods integrated by the classical checks of `verify`.
pub const CLASSICAL_PERIODS: f64 = 1000.0;

pub fn dispatch(cmd: &Command, s: &Settings, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Verify { .. } => cmd_verify(s, out),
        Command::Spectrum => cmd_spectrum(s, out),
        Command::ExportWavefunction { .. } => cmd_export(s, out),
        Command::Orbit { .. } => cmd_orbit(s, out),
    }
}

fn exit_for(report: &Report) -> i32 {
    if report.all_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn out_dir(s: &Settings) -> Result<PathBuf, CliError> {
    let dir = s.out.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir)?;
    Ok(dir)
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    Ok(BufWriter::new(File::create(path)?))
}

/// Appends `section`, or a FAIL line naming the error.
fn section(report: &mut Report, name: &str, section: xsuperint_core::Result<Report>) {
    match section {
        Ok(r) => report.extend(r),
        Err(e) => report.push(Verdict::Fail, name, e.to_string()),
    }
}

fn write_report(report: &Report, s: &Settings, stem: &str) -> Result<(), CliError> {
    let Some(_) = &s.out else { return Ok(()) };
    let dir = out_dir(s)?;
    match s.format {
        Format::Csv => {
            let mut w = create(&dir.join(format!("{stem}.csv")))?;
            writeln!(w, "verdict,check,detail")?;
            for l in &report.lines {
                writeln!(w, "{},{},{}", l.verdict, csv_field(&l.name), csv_field(&l.detail))?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<_> = report
                .lines
                .iter()
                .map(|l| json!({"verdict": l.verdict.label(), "check": l.name, "detail": l.detail}))
                .collect();
            let mut w = create(&dir.join(format!("{stem}.json")))?;
            writeln!(w, "{}", serde_json::to_string_pretty(&rows).expect("json"))?;
            w.flush()?;
        }
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn eigen_identity(s: &Settings) -> xsuperint_core::Result<Report> {
    let p = &s.params;
    let (a, b) = (p.alpha(), p.beta());
    let t = build_t(a, b)?;
    let mut r = Report::new();
    for n in 1..=s.nmax as usize {
        let poly = xjacobi_eigen(n, a, b)?;
        let lam = eigenvalue(n, a, b);
        let rem = &t.apply_poly(&poly) - &RatFunc::from_poly(poly.scale(&lam));
        r.push(
            Verdict::pass_if(rem.is_zero()),
            format!("eigen identity n={n}"),
            format!("T P_{n} = {} P_{n} exactly", format_rational(&lam)),
        );
    }
    Ok(r)
}

fn energy_fixing(s: &Settings) -> xsuperint_core::Result<Report> {
    let p = &s.params;
    let mut r = Report::new();
    let levels = degeneracy_table(&s.emax, p);
    let chains = levels.iter().all(|l| l.is_chain(p.p(), p.q()));
    let degenerate = levels.iter().filter(|l| l.states.len() > 1).count();
    r.push(
        Verdict::pass_if(chains),
        "degeneracy chains",
        format!(
            "{} levels up to E/omega = {}, {degenerate} degenerate, step (m,n) -> (m-{}, n+{})",
            levels.len(),
            format_rational(&s.emax),
            p.p(),
            p.q()
        ),
    );
    let mut count = 0;
    let mut noncommuting = true;
    for m in 0..=s.mmax {
        for n in 1..=s.nmax {
            let st = QuantumState::new(m, n)?;
            for dir in [Direction::Plus, Direction::Minus] {
                // Out-of-lattice states are skipped; xi_action checks energies itself.
                if let Ok(act) = xi_action(dir, &st, p) {
                    count += 1;
                    if act.coefficient.is_zero() {
                        return Err(xsuperint_core::Error::VerificationFailure(format!(
                            "Xi {dir:?} annihilates interior state {st}"
                        )));
                    }
                    noncommuting &= !l1_noncommutation(dir, &st, p)?.is_zero();
                }
            }
        }
    }
    r.push(Verdict::Pass, "Xi energy fixing", format!("{count} exact actions with equal target energy"));
    r.push(
        Verdict::pass_if(noncommuting),
        "L1 non-commutation",
        format!("[L1, Xi] != 0 on all {count} interior actions"),
    );
    Ok(r)
}

fn orthogonality(s: &Settings) -> xsuperint_core::Result<Report> {
    let p = &s.params;
    let n = (s.nmax as usize).min(6);
    let (g, order) = angular_gram(n, p.alpha(), p.beta())?;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                worst = worst.max(g[(i, j)].abs() / (g[(i, i)] * g[(j, j)]).sqrt());
            }
        }
    }
    let mut r = Report::new();
    r.push(
        Verdict::pass_if(worst < GRAM_TOL),
        format!("angular orthogonality n<={n}"),
        format!("max relative off-diagonal {worst:.3e} (Gauss-Jacobi order {order})"),
    );
    Ok(r)
}

fn residuals(s: &Settings) -> xsuperint_core::Result<Report> {
    let p = &s.params;
    let mut r = Report::new();
    for m in 0..=s.mmax {
        for n in 1..=s.nmax.min(4) {
            let wf = Wavefunction::new(QuantumState::new(m, n)?, p)?;
            let res = schrodinger_residual(&wf, &s.grid)?;
            r.push(
                Verdict::pass_if(res < s.tol),
                format!("Schrodinger residual ({m}, {n})"),
                format!("{res:.3e} relative on {}x{} grid", s.grid.nr, s.grid.nphi),
            );
        }
    }
    let st = QuantumState::new(s.mmax.min(2), 2)?;
    let wf = Wavefunction::new(st, p)?;
    let coarse = s.grid.clone().with_size(s.grid.nr.min(40), s.grid.nphi.min(40));
    let fd = fd_residual(&wf, &coarse, FD_STEP)?;
    r.push(
        Verdict::pass_if(fd < FD_TOL),
        format!("finite-difference cross-check {st}"),
        format!("{fd:.3e} relative"),
    );
    Ok(r)
}

fn numeric_ladders(s: &Settings) -> xsuperint_core::Result<Report> {
    let p = &s.params;
    let mut r = Report::new();
    let grid = s.grid.clone().with_size(s.grid.nr.min(60), s.grid.nphi.min(60));
    for dir in [Direction::Plus, Direction::Minus] {
        for m in 0..=s.mmax {
            for n in 1..=s.nmax.min(4) {
                let st = QuantumState::new(m, n)?;
                let c = ladder_numeric_check(&st, dir, p, &grid)?;
                let detail = match c.target {
                    Some(t) => format!(
                        "-> {t}: deviation {:.3e}, ratio-1 {:.3e}",
                        c.deviation,
                        c.ratio - 1.0
                    ),
                    None => "leaves the lattice, image vanishes".to_string(),
                };
                r.push(c.verdict, format!("numeric Xi{} {st}", sign(dir)), detail);
            }
        }
    }
    Ok(r)
}

fn sign(dir: Direction) -> &'static str {
    match dir {
        Direction::Plus => "+",
        Direction::Minus => "-",
    }
}

fn parity(s: &Settings) -> xsuperint_core::Result<Report> {
    // Interpolation needs enough sample points regardless of --nmax.
    let rep = parity_check((s.nmax as usize).max(PARITY_NMAX), &s.params)?;
    let mut r = Report::new();
    r.push(
        Verdict::pass_if(rep.passed()),
        "parity A -> -A",
        format!(
            "swap angular {} radial {}, Xi+ + Xi- even {}, (Xi+ - Xi-)/A even {}, Xi+ even {} (degrees {}, {})",
            rep.angular_swap, rep.radial_swap, rep.sum_even, rep.diff_over_a_even, rep.xi_plus_even,
            rep.angular_degree, rep.radial_degree
        ),
    );
    Ok(r)
}

/// Conservation, closure and order for one classical parameter set.
pub fn classical_report(cp: &ClassicalParams, periods: f64) -> xsuperint_core::Result<Report> {
    let mut r = Report::new();
    let tr = cp.radial_period();
    let s0 = cp.default_seed();
    let traj = integrate(&s0, cp, cp.default_dt(), periods * tr)?;
    let (de, dl) = (traj.energy_drift(cp), traj.l1_drift(cp));
    r.push(Verdict::pass_if(de < DRIFT_TOL), "classical energy drift", format!("{de:.3e} over {periods} radial periods"));
    r.push(Verdict::pass_if(dl < DRIFT_TOL), "classical L1 drift", format!("{dl:.3e} over {periods} radial periods"));
    let c = closure_metric(&traj, cp)?;
    r.push(Verdict::pass_if(c < CLOSURE_TOL), "classical closure", format!("metric {c:.3e}"));
    let order = convergence_order(&s0, cp, tr / 20.0, 10.0 * tr)?;
    r.push(
        Verdict::pass_if(order >= 8.0),
        "classical convergence order",
        format!("{order:.2} (Richardson, dt = T_r/20, 10 radial periods)"),
    );
    Ok(r)
}

pub fn verify_report(s: &Settings) -> Report {
    let mut report = Report::new();
    report.push(Verdict::Info, "parameters", s.describe());
    let p = &s.params;
    section(&mut report, "eigen identity", eigen_identity(s));
    section(&mut report, "xjacobi reconciliation", reconcile_report(s.nmax as usize, p.alpha(), p.beta()));
    section(&mut report, "ladders", ladder_report(p, (s.nmax as usize).min(6), (s.mmax as usize).min(6)));
    section(&mut report, "energy fixing", energy_fixing(s));
    section(&mut report, "orthogonality", orthogonality(s));
    section(&mut report, "residuals", residuals(s));
    section(&mut report, "numeric ladders", numeric_ladders(s));
    section(&mut report, "parity", parity(s));
    if s.classical {
        match s.classical_params() {
            Ok(cp) => section(&mut report, "classical", classical_report(&cp, CLASSICAL_PERIODS)),
            Err(e) => report.push(Verdict::Fail, "classical", e.to_string()),
        }
    }
    report
}

fn cmd_verify(s: &Settings, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = verify_report(s);
    write!(out, "{report}")?;
    let fails = report.count(Verdict::Fail);
    writeln!(out, "SUMMARY {} checks, {} failed", report.lines.len(), fails)?;
    write_report(&report, s, "verify")?;
    Ok(exit_for(&report))
}

fn cmd_spectrum(s: &Settings, out: &mut dyn Write) -> Result<i32, CliError> {
    let p = &s.params;
    let levels = degeneracy_table(&s.emax, p);
    let states = |l: &xsuperint_core::spectral::Level| {
        l.states.iter().map(|st| format!("{}:{}", st.m, st.n)).collect::<Vec<_>>().join(";")
    };
    let mut body = Vec::new();
    match s.format {
        Format::Csv => {
            writeln!(body, "energy_over_omega,energy,degeneracy,states")?;
            for l in &levels {
                let e = p.omega() * xsuperint_core::poly_core::rational::to_f64(&l.energy_over_omega);
                writeln!(
                    body,
                    "{},{},{},{}",
                    format_rational(&l.energy_over_omega),
                    fmt_f64(e),
                    l.states.len(),
                    states(l)
                )?;
            }
        }
        Format::Json => {
            let v = json!({
                "alpha": format_rational(p.alpha()),
                "beta": format_rational(p.beta()),
                "omega": p.omega(),
                "p": p.p(),
                "q": p.q(),
                "emax": format_rational(&s.emax),
                "levels": levels,
            });
            writeln!(body, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        }
    }
    match &s.out {
        Some(_) => {
            let ext = if s.format == Format::Csv { "csv" } else { "json" };
            let path = out_dir(s)?.join(format!("spectrum.{ext}"));
            fs::write(&path, &body)?;
            writeln!(out, "wrote {} ({} levels)", path.display(), levels.len())?;
        }
        None => out.write_all(&body)?,
    }
    let chains = levels.iter().all(|l| l.is_chain(p.p(), p.q()));
    Ok(if chains { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_export(s: &Settings, out: &mut dyn Write) -> Result<i32, CliError> {
    let st = QuantumState::new(s.m, s.n).map_err(|e| CliError::Usage(e.to_string()))?;
    let wf = Wavefunction::new(st, &s.params).map_err(|e| CliError::Usage(e.to_string()))?;
    let dir = out_dir(s)?;
    let stem = format!("psi_m{}_n{}", s.m, s.n);
    let fail = |e: xsuperint_core::Error| CliError::Failure(e.to_string());
    match s.format {
        Format::Csv => {
            let csv = dir.join(format!("{stem}.csv"));
            let mut w = create(&csv)?;
            write_grid_csv(&wf, &s.grid, &mut w).map_err(fail)?;
            w.flush()?;
            let mut j = create(&dir.join(format!("{stem}.json")))?;
            write_sidecar_json(&wf, &mut j).map_err(fail)?;
            j.flush()?;
            writeln!(out, "wrote {}", csv.display())?;
        }
        Format::Json => {
            let phis = s.grid.phi_values(&s.params);
            let rs = s.grid.r_values();
            let psi = rs
                .iter()
                .map(|&r| phis.iter().map(|&phi| wf.eval(r, phi)).collect::<xsuperint_core::Result<Vec<_>>>())
                .collect::<xsuperint_core::Result<Vec<_>>>()
                .map_err(fail)?;
            let v = json!({ "metadata": sidecar(&wf), "r": rs, "phi": phis, "psi": psi });
            let path = dir.join(format!("{stem}.json"));
            fs::write(&path, format!("{}\n", serde_json::to_string(&v).expect("json")))?;
            writeln!(out, "wrote {}", path.display())?;
        }
    }
    Ok(EXIT_PASS)
}

fn write_trajectory(traj: &Trajectory, cp: &ClassicalParams, s: &Settings) -> Result<PathBuf, CliError> {
    let dir = out_dir(s)?;
    match s.format {
        Format::Csv => {
            let path = dir.join("orbit.csv");
            let mut w = create(&path)?;
            write_trajectory_csv(traj, cp, &mut w).map_err(|e| CliError::Failure(e.to_string()))?;
            w.flush()?;
            Ok(path)
        }
        Format::Json => {
            let path = dir.join("orbit.json");
            let v = json!({ "params": cp, "dt": traj.dt, "order": traj.order, "samples": traj.samples });
            fs::write(&path, format!("{}\n", serde_json::to_string(&v).expect("json")))?;
            Ok(path)
        }
    }
}

fn cmd_orbit(s: &Settings, out: &mut dyn Write) -> Result<i32, CliError> {
    let cp = s.classical_params()?;
    let s0 = s.initial_state(&cp);
    if !cp.in_wedge(&s0) {
        return Err(CliError::Usage(format!("initial state {s0:?} is outside the wedge")));
    }
    let tr = cp.radial_period();
    let dt = s.dt.unwrap_or(cp.default_dt());
    let t_end = s.t_end.unwrap_or((2.0 * cp.q() as f64).max(10.0) * tr);
    let traj = integrate(&s0, &cp, dt, t_end).map_err(|e| CliError::Failure(e.to_string()))?;
    let path = write_trajectory(&traj, &cp, s)?;

    let mut r = Report::new();
    r.push(
        Verdict::Info,
        "orbit",
        format!(
            "{}, dt={}, t_end={}, {} samples, order {}, written to {}",
            s.describe(),
            fmt_f64(dt),
            fmt_f64(t_end),
            traj.len(),
            traj.order,
            path.display()
        ),
    );
    let (de, dl) = (traj.energy_drift(&cp), traj.l1_drift(&cp));
    r.push(Verdict::pass_if(de < DRIFT_TOL), "energy drift", format!("{de:.3e}"));
    r.push(Verdict::pass_if(dl < DRIFT_TOL), "L1 drift", format!("{dl:.3e}"));
    match closure_metric(&traj, &cp) {
        Ok(c) => r.push(Verdict::pass_if(c < CLOSURE_TOL), "closure metric", format!("{c:.3e}")),
        Err(e) => r.push(Verdict::Info, "closure metric", e.to_string()),
    }
    // Drift at twice the step, for the convergence-order signature.
    match integrate(&s0, &cp, 2.0 * dt, t_end) {
        Ok(coarse) => {
            let dc = coarse.energy_drift(&cp);
            r.push(
                Verdict::Info,
                "energy drift at 2 dt",
                format!("{dc:.3e} (ratio {:.3e})", if de > 0.0 { dc / de } else { f64::INFINITY }),
            );
        }
        Err(e) => r.push(Verdict::Info, "energy drift at 2 dt", e.to_string()),
    }
    match convergence_order(&s0, &cp, tr / 20.0, 10.0 * tr) {
        Ok(o) => r.push(Verdict::Info, "convergence order", format!("{o:.2} (dt = T_r/20, 10 radial periods)")),
        Err(e) => r.push(Verdict::Info, "convergence order", e.to_string()),
    }
    write!(out, "{r}")?;
    Ok(exit_for(&r))
}
