//! Criterion benchmarks for `repcur-core` live in `benches/`.
