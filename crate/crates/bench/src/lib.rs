//! Criterion benchmarks for braidknot; see `benches/`.
