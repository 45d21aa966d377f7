//! Benchmark-only crate; see `benches/kdis.rs`.
