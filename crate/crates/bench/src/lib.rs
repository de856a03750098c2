//! Criterion benchmarks for pivotlab-core live in `benches/`.
