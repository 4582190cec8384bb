//! Criterion benchmarks for `bent-core`. Run with `cargo bench -p bent-bench`.
