//! One timed evaluation of `p(n)`.

use std::time::{Duration, Instant};

use polycensus::census;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub n: u64,
    pub seconds: f64,
    pub digits: u64,
    /// SHA-256 of the big-endian bytes of `p(n)`, for run-to-run comparison.
    pub sha256: String,
}

pub fn run(n: u64) -> Result<BenchReport, CliError> {
    if n < 3 {
        return Err(CliError::Usage(format!(
            "--n must be at least 3 (no polygon has perimeter below 3), got {n}"
        )));
    }
    let start = Instant::now();
    let value = census::count_polygons(n)?;
    let elapsed = start.elapsed();
    Ok(BenchReport {
        n,
        seconds: elapsed.as_secs_f64(),
        digits: value.decimal_digits(),
        sha256: hex::encode(Sha256::digest(value.as_biguint().to_bytes_be())),
    })
}

impl BenchReport {
    pub fn elapsed(&self) -> Duration {
        Duration::from_secs_f64(self.seconds)
    }

    pub fn summary(&self) -> String {
        format!(
            "p({}) computed in {:.6} s: {} digits, sha256 {}",
            self.n, self.seconds, self.digits, self.sha256
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_n_is_fast_and_stable() {
        let a = run(100).unwrap();
        let b = run(100).unwrap();
        assert_eq!(
            a.digits,
            census::count_polygons(100).unwrap().to_string().len() as u64
        );
        assert_eq!(a.sha256, b.sha256);
        assert!(a.elapsed() < Duration::from_secs(1));
    }

    #[test]
    fn rejects_tiny_n() {
        assert!(matches!(run(1), Err(CliError::Usage(_))));
    }
}
