//! Criterion benchmarks for the reeskit engine live in `benches/`.
