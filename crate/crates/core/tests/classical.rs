use xsuperint_core::classical::*;
use xsuperint_core::Error;

fn cp(p: u32, q: u32) -> ClassicalParams {
    ClassicalParams::new(1.0, 1.0, 3.0, p, q).unwrap()
}

#[test]
fn zero_time_trajectory() {
    let c = cp(1, 1);
    let s = c.default_seed();
    let t = integrate(&s, &c, c.default_dt(), 0.0).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(*t.initial(), s);
}

#[test]
fn equilibrium_is_stationary() {
    let c = cp(3, 2);
    let eq = c.equilibrium();
    let t = integrate(&eq, &c, c.default_dt(), 5.0 * c.radial_period()).unwrap();
    let end = t.last().1;
    assert!((end.r - eq.r).abs() < 1e-12 && (end.phi - eq.phi).abs() < 1e-12);
    assert!(t.energy_drift(&c) < 1e-14);
    assert!((h_classical(&eq, &c).unwrap() - c.minimum_energy()).abs() < 1e-12);
}

#[test]
fn l1_minimum_by_scan() {
    let c = cp(2, 1);
    let span = c.wedge_angle();
    let best = (1..20000)
        .map(|i| {
            let s = PhaseState::new(1.0, span * i as f64 / 20000.0, 0.0, 0.0);
            l1_classical(&s, &c).unwrap()
        })
        .fold(f64::INFINITY, f64::min);
    assert!((best - c.l1_minimum()).abs() < 1e-6 * c.l1_minimum());
}

#[test]
fn l1_reflection_symmetry() {
    let c = cp(3, 2);
    let swapped = ClassicalParams::new(1.0, 3.0, 1.0, 3, 2).unwrap();
    let s = PhaseState::new(1.2, 0.3, 0.1, -0.4);
    let m = PhaseState::new(1.2, c.wedge_angle() - 0.3, 0.1, -0.4);
    let (a, b) = (l1_classical(&s, &c).unwrap(), l1_classical(&m, &swapped).unwrap());
    assert!((a - b).abs() < 1e-12 * a);
}

#[test]
fn oscillator_scaling() {
    let s = PhaseState::new(1.5, 0.4, 0.2, 0.3);
    let a = h_classical(&s, &cp(1, 1)).unwrap();
    let b = h_classical(&s, &ClassicalParams::new(2.0, 1.0, 3.0, 1, 1).unwrap()).unwrap();
    assert!((b - a - 1.5 * s.r * s.r).abs() < 1e-12);
}

#[test]
fn conservation_and_closure() {
    for (p, q) in [(1, 1), (2, 1), (1, 2), (3, 2)] {
        let c = cp(p, q);
        let s = c.default_seed();
        let tr = c.radial_period();
        let t = integrate(&s, &c, c.default_dt(), 1000.0 * tr).unwrap();
        assert!(t.energy_drift(&c) < 1e-8);
        assert!(t.l1_drift(&c) < 1e-8);
        assert!(closure_metric(&t, &c).unwrap() < 1e-6);
    }
}

#[test]
fn fractional_k_needs_the_longer_time() {
    let c = cp(3, 2);
    let tr = c.radial_period();
    let t = integrate(&c.default_seed(), &c, c.default_dt(), 4.0 * tr).unwrap();
    assert!(return_distance(&t, &c, tr) > 1e-2);
    assert!(return_distance(&t, &c, 2.0 * tr) < 1e-6);
    let short = integrate(&c.default_seed(), &c, c.default_dt(), 3.0 * tr).unwrap();
    assert!(matches!(closure_metric(&short, &c), Err(Error::InsufficientSpan { .. })));
}

#[test]
fn irrational_control_does_not_close() {
    let c = ClassicalParams::new(1.0, 1.0, 3.0, 1393, 985).unwrap();
    let tr = c.radial_period();
    let t = integrate(&c.default_seed(), &c, c.default_dt(), 40.0 * tr).unwrap();
    assert!(min_return_distance(&t, &c, 0.5 * tr, f64::INFINITY) > 1e-3);
}

#[test]
fn time_reversal() {
    let c = cp(1, 2);
    let s = c.default_seed();
    let t_end = 3.3 * c.radial_period();
    let f = integrate(&s, &c, c.default_dt(), t_end).unwrap();
    let b = integrate(&f.last().1.reversed(), &c, c.default_dt(), t_end).unwrap();
    let e = b.last().1.reversed();
    let d = [e.r - s.r, e.phi - s.phi, e.p_r - s.p_r, e.p_phi - s.p_phi];
    assert!(d.iter().all(|v| v.abs() < 1e-8), "{d:?}");
}

#[test]
fn order_at_least_eight() {
    for (p, q) in [(1, 1), (2, 1), (1, 2), (3, 2)] {
        let c = cp(p, q);
        let tr = c.radial_period();
        let order = convergence_order(&c.default_seed(), &c, tr / 20.0, 10.0 * tr).unwrap();
        assert!(order >= 8.0, "k={p}/{q}: {order}");
    }
}

#[test]
fn guards_fire() {
    let c = cp(1, 1);
    let s = c.default_seed();
    let r = integrate(&s, &c, c.radial_period() / 2.0, 10.0 * c.radial_period());
    assert!(matches!(r, Err(Error::StepSizeTooLarge { .. }) | Err(Error::WedgeExit { .. })), "{r:?}");
    let lax = IntegratorOptions { drift_guard: f64::INFINITY };
    let r = integrate_with(&s, &c, c.radial_period(), 50.0 * c.radial_period(), lax);
    assert!(r.is_err());
    assert!(integrate(&PhaseState::new(1.0, -0.1, 0.0, 0.0), &c, 0.01, 1.0).is_err());
}

#[test]
fn trajectory_csv_columns() {
    let c = cp(1, 1);
    let t = integrate(&c.default_seed(), &c, c.default_dt(), 0.1).unwrap();
    let mut buf = Vec::new();
    write_trajectory_csv(&t, &c, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with("t,r,phi,p_r,p_phi,H,L1\n"));
    assert_eq!(text.lines().count(), t.len() + 1);
}
