//! Parallel driver for the critical-point scan.

use germlink_core::germ::{ScanAccumulator, ScanConfig, ScanReport};
use rayon::prelude::*;

/// Samples per work unit. Fixed, so chunk boundaries never depend on the
/// worker count.
const CHUNK: u64 = 4096;

/// Same result as the sequential scan: chunks are scanned in parallel and
/// merged in index order.
pub fn parallel_scan(p: u32, q: u32, config: &ScanConfig, pool: &rayon::ThreadPool) -> ScanReport {
    let chunks: Vec<u64> = (0..config.sample_count.div_ceil(CHUNK)).collect();
    let parts: Vec<ScanAccumulator> = pool.install(|| {
        chunks
            .par_iter()
            .map(|&i| {
                let mut acc = ScanAccumulator::new(p, q, config);
                acc.add_range(i * CHUNK..((i + 1) * CHUNK).min(config.sample_count));
                acc
            })
            .collect()
    });
    parts
        .into_iter()
        .fold(ScanAccumulator::new(p, q, config), ScanAccumulator::merge)
        .finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::pool;
    use germlink_core::germ::critical_point_scan;
    use germlink_core::Rational;

    #[test]
    fn matches_sequential_scan() {
        let config = ScanConfig {
            sample_count: 10_000,
            radius: Rational::one(),
            seed: 11,
        };
        let sequential = critical_point_scan(2, 3, &config);
        for threads in [1, 3] {
            let parallel = parallel_scan(2, 3, &config, &pool(Some(threads)).unwrap());
            assert_eq!(parallel, sequential);
        }
    }
}
