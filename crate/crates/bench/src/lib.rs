//! Criterion benchmarks for the arithmetic kernels and the constructions.
//! Run with `cargo bench -p equicurve-bench`; the sources are under `benches/`.
