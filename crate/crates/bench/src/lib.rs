//! Criterion benchmarks for xsuperint; see `benches/`.
