//! Benchmark fixtures for the mltt kernel. The actual benchmarks live under
//! `benches/`.

pub mod fixtures;
