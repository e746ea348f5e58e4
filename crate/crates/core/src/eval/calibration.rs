use std::collections::BTreeMap;

use serde::Serialize;

use super::LabeledSample;
use crate::classify::Classification;
use crate::consensus::average_p_f;
use crate::corpus::{normalize_name, NameKey, NameTable};
use crate::{Error, Result};

/// How to cut reference strength `s = max(p_f, 1 - p_f)` on [0.5, 1] into
/// bands.
#[derive(Debug, Clone, PartialEq)]
pub enum BandEdges {
    /// Edges at the quantiles of the observed strengths (duplicates merged).
    Quantiles(usize),
    EqualWidth(usize),
    /// Strictly increasing, starting at 0.5 and ending at 1.0.
    Explicit(Vec<f64>),
}

impl Default for BandEdges {
    fn default() -> Self {
        BandEdges::Quantiles(5)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CalibrationBand {
    pub lower: f64,
    pub upper: f64,
    pub count: usize,
    pub matches: usize,
    pub correspondence: f64,
    /// Mean reference strength: the correspondence a classifier picking the
    /// majority gender would reach if labels followed the reference data.
    pub expected: f64,
    /// Standard error of `correspondence` under that model.
    pub std_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HoldoutStats {
    pub name: NameKey,
    pub strength: Option<f64>,
    pub count: usize,
    pub matches: usize,
    pub correspondence: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CalibrationReport {
    pub bands: Vec<CalibrationBand>,
    pub holdouts: Vec<HoldoutStats>,
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

fn edges(spec: &BandEdges, strengths: &[f64]) -> Result<Vec<f64>> {
    let mut e = match spec {
        BandEdges::EqualWidth(k) | BandEdges::Quantiles(k) if *k == 0 => {
            return Err(Error::InvalidParam("need at least one band".into()))
        }
        BandEdges::EqualWidth(k) => (0..=*k).map(|i| 0.5 + 0.5 * i as f64 / *k as f64).collect(),
        BandEdges::Quantiles(k) => {
            let mut sorted = strengths.to_vec();
            sorted.sort_by(f64::total_cmp);
            let mut e = vec![0.5];
            if !sorted.is_empty() {
                e.extend((1..*k).map(|i| quantile(&sorted, i as f64 / *k as f64)));
            }
            e.push(1.0);
            e
        }
        BandEdges::Explicit(e) => {
            let ok = e.len() >= 2
                && e[0] == 0.5
                && e[e.len() - 1] == 1.0
                && e.windows(2).all(|w| w[0] < w[1]);
            if !ok {
                return Err(Error::InvalidParam(
                    "band edges must increase strictly from 0.5 to 1.0".into(),
                ));
            }
            e.clone()
        }
    };
    e.dedup_by(|b, a| *b <= *a);
    if e.last() != Some(&1.0) {
        e.push(1.0);
    }
    Ok(e)
}

fn band_of(edges: &[f64], s: f64) -> usize {
    let last = edges.len() - 2;
    (0..=last).find(|&j| s < edges[j + 1]).unwrap_or(last)
}

/// Groups classified rows by how strongly their names are gendered in the
/// reference data and compares each group's correspondence with its
/// expected (Bayes) correspondence. Rows whose names are in `holdouts` are
/// tabulated separately. Empty bands are omitted.
pub fn calibration_bands(
    preds: &[Classification],
    sample: &LabeledSample,
    table: &NameTable,
    band_edges: &BandEdges,
    holdouts: &[&str],
) -> Result<CalibrationReport> {
    if preds.len() != sample.len() {
        return Err(Error::RowMismatch {
            preds: preds.len(),
            rows: sample.len(),
        });
    }
    let held: Vec<NameKey> = holdouts.iter().filter_map(|h| normalize_name(h)).collect();
    let mut held_stats: BTreeMap<NameKey, (usize, usize)> =
        held.iter().map(|k| (k.clone(), (0, 0))).collect();

    // (strength, matched)
    let mut scored: Vec<(f64, bool)> = Vec::new();
    for (p, row) in preds.iter().zip(sample.rows()) {
        if !p.label.is_classified() {
            continue;
        }
        let Some(key) = normalize_name(&row.name) else { continue };
        let hit = p.label.matches(row.label);
        if let Some(h) = held_stats.get_mut(&key) {
            h.0 += 1;
            h.1 += usize::from(hit);
            continue;
        }
        let Some(p_f) = table.get(&key).and_then(average_p_f) else { continue };
        scored.push((p_f.max(1.0 - p_f), hit));
    }

    let strengths: Vec<f64> = scored.iter().map(|(s, _)| *s).collect();
    let e = edges(band_edges, &strengths)?;
    let nb = e.len() - 1;
    let mut acc = vec![(0usize, 0usize, 0.0f64, 0.0f64); nb];
    for (s, hit) in &scored {
        let b = &mut acc[band_of(&e, *s)];
        b.0 += 1;
        b.1 += usize::from(*hit);
        b.2 += s;
        b.3 += s * (1.0 - s);
    }
    let bands = acc
        .into_iter()
        .enumerate()
        .filter(|(_, b)| b.0 > 0)
        .map(|(j, (count, matches, s_sum, var_sum))| CalibrationBand {
            lower: e[j],
            upper: e[j + 1],
            count,
            matches,
            correspondence: matches as f64 / count as f64,
            expected: s_sum / count as f64,
            std_error: var_sum.sqrt() / count as f64,
        })
        .collect();

    let holdouts = held_stats
        .into_iter()
        .map(|(name, (count, matches))| {
            let strength = table
                .get(&name)
                .and_then(average_p_f)
                .map(|p| p.max(1.0 - p));
            HoldoutStats {
                name,
                strength,
                count,
                matches,
                correspondence: (count > 0).then(|| matches as f64 / count as f64),
            }
        })
        .collect();
    Ok(CalibrationReport { bands, holdouts })
}
