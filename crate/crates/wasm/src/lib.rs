//! wasm-bindgen exports for the static demo page in `www/`.
//!
//! Every export returns a JSON string; errors come back as
//! `{"error": "..."}`.

use std::cell::OnceCell;

use namegender::classify::{Classifier, Estimator};
use namegender::consensus::{cct_expectation, cct_fit, plant, FitOptions};
use namegender::corpus::{normalize_name, Country, SourceTable};
use namegender::taxonomy::{describe, entropy, TaxonomyParams};
use namegender::NameTable;
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

const FIXTURE: [(&str, &str); 7] = [
    ("dict_anglo", include_str!("../../../data/fixture/dict_anglo.tsv")),
    ("dict_asia", include_str!("../../../data/fixture/dict_asia.tsv")),
    ("dict_central", include_str!("../../../data/fixture/dict_central.tsv")),
    ("dict_eastern", include_str!("../../../data/fixture/dict_eastern.tsv")),
    ("dict_nordic", include_str!("../../../data/fixture/dict_nordic.tsv")),
    ("dict_romance", include_str!("../../../data/fixture/dict_romance.tsv")),
    ("us_census_1990", include_str!("../../../data/fixture/us_census_1990.tsv")),
];

thread_local! {
    static TABLE: OnceCell<NameTable> = const { OnceCell::new() };
}

fn build_table() -> NameTable {
    let sources = FIXTURE
        .iter()
        .map(|(id, text)| {
            let s = SourceTable::from_reader(text.as_bytes(), id, id).expect("bundled fixture parses");
            s.poststratify().expect("bundled fixture stratifies").0
        })
        .collect();
    NameTable::build(sources).expect("bundled fixture builds")
}

fn with_table<T>(f: impl FnOnce(&NameTable) -> T) -> T {
    TABLE.with(|cell| f(cell.get_or_init(build_table)))
}

fn respond<T: Serialize>(r: namegender::Result<T>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).unwrap_or_else(|e| json!({ "error": e.to_string() }).to_string()),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// Entropy curve on `steps + 1` points of [0, 1] and the strength at which
/// the entropy falls to `threshold` bits.
#[wasm_bindgen]
pub fn entropy_curve(threshold: f64, steps: usize) -> String {
    if !(0.0..=1.0).contains(&threshold) || steps < 2 {
        return json!({ "error": "threshold must lie in [0, 1] and steps be at least 2" }).to_string();
    }
    let points: Vec<[f64; 2]> = (0..=steps)
        .map(|i| {
            let p = i as f64 / steps as f64;
            [p, entropy(p)]
        })
        .collect();
    let (mut lo, mut hi) = (0.5f64, 1.0f64);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if entropy(mid) > threshold {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    json!({ "points": points, "boundary": hi }).to_string()
}

#[derive(Serialize)]
struct Recovery {
    planted: Vec<f64>,
    recovered: Vec<f64>,
    iterations: usize,
    converged: bool,
    accuracy: f64,
    oracle_accuracy: f64,
    max_error: f64,
}

/// Plants a synthetic panel, fits the consensus model and compares.
#[wasm_bindgen]
pub fn cct_recovery(n_sources: usize, n_names: usize, lo: f64, hi: f64, seed: u32) -> String {
    respond((|| {
        if n_sources * n_names > 2_000_000 {
            return Err(namegender::Error::InvalidParam("panel too large for the demo".into()));
        }
        let p = plant(n_sources, n_names, lo, hi, seed.into())?;
        let fit = cct_fit(&p.reports, &FitOptions::default())?;
        let accuracy = |z: &[f64]| {
            z.iter().zip(&p.consensus).filter(|(z, y)| (**z > 0.5) == **y).count() as f64 / n_names as f64
        };
        let oracle = cct_expectation(&p.reports, &p.competences)?;
        let max_error = fit
            .competences()
            .iter()
            .zip(&p.competences)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        Ok(Recovery {
            accuracy: accuracy(fit.z()),
            oracle_accuracy: accuracy(&oracle),
            recovered: fit.competences().to_vec(),
            planted: p.competences,
            iterations: fit.iterations(),
            converged: fit.converged(),
            max_error,
        })
    })())
}

/// Classifies `name` against the bundled fixture, optionally restricted to
/// comma-separated country codes.
#[wasm_bindgen]
pub fn classify_name(name: &str, countries: &str, band: f64) -> String {
    with_table(|table| {
        respond((|| {
            let classifier = Classifier::new(table, Estimator::average(table), band)?;
            let countries = countries.trim();
            let c = if countries.is_empty() {
                classifier.classify(name)
            } else {
                classifier.classify_conditioned(name, &Country::parse_list(countries)?)?
            };
            let key = normalize_name(name);
            let params = TaxonomyParams::default();
            let row = key.as_ref().map(|k| describe(k, table, &params));
            let by_source: Vec<(String, f64)> = key
                .as_ref()
                .and_then(|k| table.p_f_by_source(k))
                .map(|v| v.into_iter().map(|(s, p)| (s.to_string(), p)).collect())
                .unwrap_or_default();
            Ok(json!({
                "label": c.label.as_str(),
                "p_f": c.p_f,
                "basis": c.basis.to_string(),
                "taxon": c.taxon.as_str(),
                "normalized": key.map(|k| k.to_string()),
                "fallback": c.fallback,
                "entropy": row.as_ref().and_then(|r| r.entropy),
                "entropy_country": row.as_ref().and_then(|r| r.entropy_country),
                "entropy_decade": row.as_ref().and_then(|r| r.entropy_decade),
                "total_weight": row.as_ref().and_then(|r| r.total_weight),
                "by_source": by_source,
            }))
        })())
    })
}

/// Number of names in the bundled fixture.
#[wasm_bindgen]
pub fn fixture_size() -> usize {
    with_table(NameTable::len)
}
