//! Criterion benchmarks for `z4codes`; run with `cargo bench -p z4codes-bench`.
