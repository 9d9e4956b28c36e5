use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use xsuperint_core::classical::{integrate, ClassicalParams};
use xsuperint_core::poly_core::rational::int;
use xsuperint_core::spectral::{angular_gram, schrodinger_residual, Wavefunction, WedgeGrid};
use xsuperint_core::{Params, QuantumState};

fn bench_numeric(c: &mut Criterion) {
    let params = Params::from_ratios(1, 1, 3, 1, 1.0, 1, 1).unwrap();
    let wf = Wavefunction::new(QuantumState::new(2, 3).unwrap(), &params).unwrap();
    let grid = WedgeGrid::default_for(&params);
    c.bench_function("residual 200x200", |b| b.iter(|| schrodinger_residual(black_box(&wf), &grid).unwrap()));
    c.bench_function("eval psi", |b| b.iter(|| wf.eval(black_box(1.3), black_box(0.4)).unwrap()));

    c.bench_function("angular gram n<=6", |b| b.iter(|| angular_gram(black_box(6), &int(1), &int(3)).unwrap()));

    let cp = ClassicalParams::new(1.0, 1.0, 3.0, 3, 2).unwrap();
    let s0 = cp.default_seed();
    let mut g = c.benchmark_group("classical");
    g.sample_size(20);
    g.bench_function("integrate 10 radial periods", |b| {
        b.iter(|| integrate(black_box(&s0), &cp, cp.default_dt(), 10.0 * cp.radial_period()).unwrap())
    });
    g.finish();
}

criterion_group!(benches, bench_numeric);
criterion_main!(benches);
