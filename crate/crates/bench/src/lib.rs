//! Benchmark-only crate; see `benches/`.

/// Perimeters used by the closed-form benchmarks.
pub const PERIMETERS: [u64; 4] = [100, 1_000, 10_000, 100_000];
