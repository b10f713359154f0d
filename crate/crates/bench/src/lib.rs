//! Criterion benchmarks for the exact solvers live in `benches/`.
