//! Criterion benchmarks for `ordring`; see `benches/`.
