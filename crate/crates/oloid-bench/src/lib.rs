//! Benchmark harness crate; see `benches/eval.rs`.
