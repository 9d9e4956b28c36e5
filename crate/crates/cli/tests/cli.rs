use std::path::Path;
use std::process::Command;

fn bin() -> &'static Path {
    Path::new(env!("CARGO_BIN_EXE_xsuperint"))
}

fn run_env(args: &[&str], threads: &str) -> (i32, String, String) {
    let o = Command::new(bin()).args(args).env("XSUPERINT_THREADS", threads).output().unwrap();
    (
        o.status.code().unwrap_or(-1),
        String::from_utf8(o.stdout).unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, "2")
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
    assert_eq!(run(&[]).0, 2);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# spectrum settings\nalpha=1\nbeta=2\nemax=12\np=2\n").unwrap();
    let c = cfg.to_str().unwrap();
    let (code, out, _) = run(&["spectrum", "--config", c, "--p", "1"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "energy_over_omega,energy,degeneracy,states");
    assert_eq!(lines[1], "5,5.0000000000000000e0,1,0:1");
    assert_eq!(lines[4], "11,1.1000000000000000e1,4,3:1;2:2;1:3;0:4");
    assert_eq!(lines.len(), 5);

    std::fs::write(&cfg, "nosuchkey=1\n").unwrap();
    assert_eq!(run(&["spectrum", "--config", c]).0, 2);
    assert_eq!(run(&["spectrum", "--config", "/nonexistent/file"]).0, 2);
}

#[test]
fn spectrum_json_keeps_rationals() {
    let (code, out, _) = run(&["spectrum", "--alpha", "1/2", "--beta", "5/2", "--p", "3", "--q", "2", "--emax", "25/2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["alpha"], "1/2");
    assert_eq!(v["emax"], "25/2");
    assert!(v["levels"].as_array().unwrap().iter().all(|l| l["energy_over_omega"].is_string()));
}

#[test]
fn wavefunction_export_formats() {
    let dir = tempfile::tempdir().unwrap();
    let o = dir.path().to_str().unwrap();
    let (code, _, _) = run(&["export-wavefunction", "--m", "0", "--n", "1", "--grid", "5x7", "--out", o]);
    assert_eq!(code, 0);
    let csv = std::fs::read_to_string(dir.path().join("psi_m0_n1.csv")).unwrap();
    assert!(!csv.contains('\r'));
    let rows: Vec<_> = csv.lines().collect();
    assert_eq!(rows[0], "r,phi,psi");
    assert_eq!(rows.len(), 36);
    for row in &rows[1..] {
        let cells: Vec<_> = row.split(',').collect();
        assert_eq!(cells.len(), 3);
        // 17 significant digits: d.dddddddddddddddde[+-]x
        for c in cells {
            let mantissa = c.split('e').next().unwrap().trim_start_matches('-');
            assert_eq!(mantissa.len(), 18, "{c}");
        }
    }
    let (code, _, _) = run(&["export-wavefunction", "--m", "1", "--n", "2", "--grid", "4", "--format", "json", "--out", o]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("psi_m1_n2.json")).unwrap()).unwrap();
    assert_eq!(v["psi"].as_array().unwrap().len(), 4);
    assert_eq!(v["metadata"]["energy_over_omega"], "10");
    assert_eq!(run(&["export-wavefunction", "--n", "0", "--out", o]).0, 2);
}

#[test]
fn orbit_equilibrium_is_stationary() {
    let dir = tempfile::tempdir().unwrap();
    let o = dir.path().to_str().unwrap();
    let (code, out, _) = run(&["orbit", "--start", "equilibrium", "--t-end", "20", "--p", "3", "--q", "2", "--out", o]);
    assert_eq!(code, 0, "{out}");
    let drift: f64 = out
        .lines()
        .find(|l| l.starts_with("PASS energy drift"))
        .and_then(|l| l.rsplit(' ').next())
        .unwrap()
        .parse()
        .unwrap();
    assert!(drift < 1e-14);
}

#[test]
fn orbit_reports_closure_and_order() {
    let dir = tempfile::tempdir().unwrap();
    let o = dir.path().to_str().unwrap();
    let (code, out, _) = run(&["orbit", "--format", "json", "--out", o]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS closure metric"));
    assert!(out.contains("INFO convergence order"));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("orbit.json")).unwrap()).unwrap();
    assert!(v["samples"].as_array().unwrap().len() > 100);
}

#[test]
fn orbit_failures_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let o = dir.path().to_str().unwrap();
    // Huge steps trip the drift guard or leave the wedge.
    assert_eq!(run(&["orbit", "--dt", "1.5", "--t-end", "30", "--out", o]).0, 1);
    // Initial data outside the wedge is a usage error.
    assert_eq!(run(&["orbit", "--phi0", "-0.1", "--out", o]).0, 2);
}

#[test]
fn thread_cap_is_validated_and_results_do_not_depend_on_it() {
    let args = ["verify", "--nmax", "2", "--mmax", "1", "--grid", "20"];
    assert_eq!(run_env(&args, "zero").0, 2);
    let (c1, o1, _) = run_env(&args, "1");
    let (c4, o4, _) = run_env(&args, "4");
    assert_eq!((c1, c4), (0, 0));
    assert_eq!(o1, o4);
}

#[test]
fn verify_writes_report_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = dir.path().to_str().unwrap();
    let args = ["verify", "--nmax", "2", "--mmax", "1", "--grid", "20", "--out", o];
    assert_eq!(run(&args).0, 0);
    let csv = std::fs::read_to_string(dir.path().join("verify.csv")).unwrap();
    assert!(csv.starts_with("verdict,check,detail\n"));
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    assert_eq!(run(&json_args).0, 0);
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("verify.json")).unwrap()).unwrap();
    assert!(v.as_array().unwrap().iter().any(|r| r["verdict"] == "MISMATCH"));
}
