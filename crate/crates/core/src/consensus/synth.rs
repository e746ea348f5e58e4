use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ReportMatrix;
use crate::corpus::{ContextKey, NameKey, NameTable, SourceTable, Weights};
use crate::{Error, Result};

/// Dense synthetic reports: source `n` reports the planted consensus of each
/// name with probability `c_true[n]` and the opposite otherwise.
/// Reproducible from `seed`.
pub fn synth_generate(c_true: &[f64], z_true: &[bool], seed: u64) -> Result<ReportMatrix> {
    if c_true.is_empty() || z_true.is_empty() {
        return Err(Error::InvalidParam("need at least one source and one name".into()));
    }
    if c_true.iter().any(|c| !(0.0..=1.0).contains(c)) {
        return Err(Error::InvalidParam("planted competences must lie in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<bool>> = c_true
        .iter()
        .map(|&c| {
            z_true
                .iter()
                .map(|&z| if rng.random_bool(c) { z } else { !z })
                .collect()
        })
        .collect();
    ReportMatrix::dense(&rows)
}

/// A synthetic panel with known parameters.
#[derive(Debug, Clone)]
pub struct Planted {
    pub competences: Vec<f64>,
    pub consensus: Vec<bool>,
    pub reports: ReportMatrix,
}

/// Plants competences uniform in `[lo, hi]` and a fair-coin consensus, then
/// draws reports with [`synth_generate`].
pub fn plant(n_sources: usize, n_names: usize, lo: f64, hi: f64, seed: u64) -> Result<Planted> {
    if !(0.0..=1.0).contains(&lo) || !(lo..=1.0).contains(&hi) {
        return Err(Error::InvalidParam(format!("bad competence range [{lo}, {hi}]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let competences: Vec<f64> = (0..n_sources).map(|_| lo + (hi - lo) * rng.random::<f64>()).collect();
    let consensus: Vec<bool> = (0..n_names).map(|_| rng.random_bool(0.5)).collect();
    let reports = synth_generate(&competences, &consensus, rng.random())?;
    Ok(Planted {
        competences,
        consensus,
        reports,
    })
}

/// Deterministic letters-only name for synthetic column `index`
/// (`aaaaa`, `aaaab`, ...).
pub fn synthetic_name(index: usize) -> NameKey {
    let mut chars = [b'a'; 5];
    let mut i = index;
    for slot in chars.iter_mut().rev() {
        *slot = b'a' + (i % 26) as u8;
        i /= 26;
    }
    NameKey::try_from(String::from_utf8(chars.to_vec()).expect("ascii")).expect("lowercase")
}

/// Wraps reports in a [`NameTable`]: one source per row with weight 1 on the
/// reported side, names from [`synthetic_name`].
pub fn panel_table(x: &ReportMatrix) -> Result<NameTable> {
    let width = x.n_sources().to_string().len();
    let sources = (0..x.n_sources())
        .map(|n| {
            let mut s = SourceTable::new(&format!("s{n:0width$}"))?;
            for &(m, rep) in x.source_reports(n) {
                let w = if rep { Weights::new(1.0, 0.0) } else { Weights::new(0.0, 1.0) };
                s.add(synthetic_name(m as usize), ContextKey::UNKNOWN, w)?;
            }
            Ok(s.pass_through())
        })
        .collect::<Result<Vec<_>>>()?;
    NameTable::build(sources)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_sources_copy_consensus() {
        let z = [true, false, false, true];
        let x = synth_generate(&[1.0, 1.0, 1.0], &z, 7).unwrap();
        for n in 0..3 {
            for (m, &zm) in z.iter().enumerate() {
                assert_eq!(x.get(n, m), Some(zm));
            }
        }
    }

    #[test]
    fn reproducible() {
        let z: Vec<bool> = (0..50).map(|i| i % 3 == 0).collect();
        let a = synth_generate(&[0.7, 0.8], &z, 11).unwrap();
        let b = synth_generate(&[0.7, 0.8], &z, 11).unwrap();
        let c = synth_generate(&[0.7, 0.8], &z, 12).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn agreement_rate_near_planted() {
        // law of large numbers: c = 0.5 + eps over 100k names, 3 sigma
        let eps = 0.02;
        let m = 100_000;
        let z: Vec<bool> = (0..m).map(|i| i % 2 == 0).collect();
        let x = synth_generate(&[0.5 + eps], &z, 3).unwrap();
        let agree = (0..m).filter(|&i| x.get(0, i) == Some(z[i])).count() as f64 / m as f64;
        let sigma = ((0.5 + eps) * (0.5 - eps) / m as f64).sqrt();
        assert!((agree - (0.5 + eps)).abs() < 3.0 * sigma, "agree = {agree}");
    }

    #[test]
    fn names_are_distinct_and_sorted() {
        let names: Vec<NameKey> = (0..1000).map(synthetic_name).collect();
        assert!(names.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(names[0].as_str(), "aaaaa");
    }

    #[test]
    fn panel_table_round_trips_reports() {
        let p = plant(4, 30, 0.6, 0.9, 1).unwrap();
        let t = panel_table(&p.reports).unwrap();
        let b = super::super::binarize_reports(&t).unwrap();
        assert_eq!(b.matrix, p.reports);
    }
}
