use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use xsuperint_core::ladders::{parity_check, xi_action, AngularLadders, Direction};
use xsuperint_core::poly_core::rational::int;
use xsuperint_core::poly_core::xjacobi_eigen;
use xsuperint_core::{Params, QuantumState};

fn bench_exact(c: &mut Criterion) {
    let (a, b) = (int(1), int(3));
    c.bench_function("xjacobi_eigen n=8", |bn| bn.iter(|| xjacobi_eigen(black_box(8), &a, &b).unwrap()));

    let ladders = AngularLadders::new(&a, &b).unwrap();
    c.bench_function("J+ action n=4 q=2", |bn| {
        bn.iter(|| ladders.action(Direction::Plus, black_box(4), 2).unwrap())
    });

    let params = Params::from_ratios(1, 1, 3, 1, 1.0, 3, 2).unwrap();
    let st = QuantumState::new(4, 2).unwrap();
    c.bench_function("Xi+ action k=3/2", |bn| bn.iter(|| xi_action(Direction::Plus, black_box(&st), &params).unwrap()));

    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("parity_check nmax=8 k=3/2", |bn| bn.iter(|| parity_check(8, &params).unwrap()));
    g.finish();
}

criterion_group!(benches, bench_exact);
criterion_main!(benches);
