use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::LabeledSample;
use crate::classify::Classification;
use crate::{Error, Result};

/// Paired comparison of two classifiers in matched-count units (B minus A).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairedDiff {
    pub observed: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub resamples: usize,
    pub seed: u64,
}

/// Percentile bootstrap of the change in matched classifications from `a`
/// to `b`, resampling individuals with replacement. Returns the observed
/// difference and the 95% interval. Unclassified rows never match.
///
/// Resample `r` draws from its own ChaCha stream `r` under `seed`, so the
/// result does not depend on evaluation order. Interval ends are order
/// statistics `k - 1` and `R - k` with `k = ceil(0.025 R)`, which makes
/// swapping `a` and `b` reflect the interval exactly.
pub fn bootstrap_paired_diff(
    a: &[Classification],
    b: &[Classification],
    sample: &LabeledSample,
    resamples: usize,
    seed: u64,
) -> Result<PairedDiff> {
    if resamples < 100 {
        return Err(Error::TooFewResamples(resamples));
    }
    for p in [a, b] {
        if p.len() != sample.len() {
            return Err(Error::RowMismatch {
                preds: p.len(),
                rows: sample.len(),
            });
        }
    }
    let diffs: Vec<i64> = a
        .iter()
        .zip(b)
        .zip(sample.rows())
        .map(|((pa, pb), row)| i64::from(pb.label.matches(row.label)) - i64::from(pa.label.matches(row.label)))
        .collect();
    let observed: i64 = diffs.iter().sum();
    let n = diffs.len();

    let mut stats: Vec<i64> = (0..resamples)
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(r as u64);
            (0..n).map(|_| diffs[rng.random_range(0..n)]).sum()
        })
        .collect();
    stats.sort_unstable();
    let k = (0.025 * resamples as f64).ceil() as usize;
    Ok(PairedDiff {
        observed: observed as f64,
        ci_low: stats[k - 1] as f64,
        ci_high: stats[resamples - k] as f64,
        resamples,
        seed,
    })
}
