//! Criterion benchmarks for the search kernels; see `benches/kernels.rs`.
