//! Benchmarks for cshuffle-core live in `benches/`.
