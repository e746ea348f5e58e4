use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::LabeledSample;
use crate::classify::{Classification, Gender, Label};
use crate::fmt::sig12;
use crate::taxonomy::TaxonLabel;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaxonStats {
    pub count: usize,
    pub classified: usize,
    pub matches: usize,
    pub coverage: f64,
    pub correspondence: Option<f64>,
}

/// Misclassification among classified rows of each validation class.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassRates {
    pub female: Option<f64>,
    pub male: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub n: usize,
    pub n_classified: usize,
    pub coverage: f64,
    /// Fraction of classified rows matching their label; absent when
    /// nothing was classified.
    pub correspondence: Option<f64>,
    pub per_taxon: BTreeMap<TaxonLabel, TaxonStats>,
    pub misclassification: ClassRates,
    pub misclassified_female: usize,
    pub misclassified_male: usize,
    /// Misclassified female-labeled rows minus misclassified male-labeled
    /// rows. Zero exactly when the composition estimate is unbiased.
    pub bias_error: i64,
    /// Fraction of classified rows the classifier labeled male.
    pub composition_estimate: Option<f64>,
    /// Fraction of all rows whose validation label is male.
    pub composition_target: f64,
}

fn ratio(num: usize, den: usize) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

/// Scores `preds` (one per sample row, in order) against the sample.
pub fn evaluate(preds: &[Classification], sample: &LabeledSample) -> Result<EvalReport> {
    if preds.len() != sample.len() {
        return Err(Error::RowMismatch {
            preds: preds.len(),
            rows: sample.len(),
        });
    }
    let mut per_taxon: BTreeMap<TaxonLabel, TaxonStats> = BTreeMap::new();
    let (mut classified, mut matches, mut pred_male, mut true_male) = (0, 0, 0, 0);
    let (mut f_classified, mut m_classified, mut f_wrong, mut m_wrong) = (0, 0, 0, 0);
    for (p, row) in preds.iter().zip(sample.rows()) {
        let t = per_taxon.entry(p.taxon).or_insert(TaxonStats {
            count: 0,
            classified: 0,
            matches: 0,
            coverage: 0.0,
            correspondence: None,
        });
        t.count += 1;
        if row.label == Gender::Male {
            true_male += 1;
        }
        if !p.label.is_classified() {
            continue;
        }
        classified += 1;
        t.classified += 1;
        if p.label == Label::Male {
            pred_male += 1;
        }
        let hit = p.label.matches(row.label);
        if hit {
            matches += 1;
            t.matches += 1;
        }
        match row.label {
            Gender::Female => {
                f_classified += 1;
                f_wrong += usize::from(!hit);
            }
            Gender::Male => {
                m_classified += 1;
                m_wrong += usize::from(!hit);
            }
        }
    }
    for t in per_taxon.values_mut() {
        t.coverage = t.classified as f64 / t.count as f64;
        t.correspondence = ratio(t.matches, t.classified);
    }
    let n = sample.len();
    Ok(EvalReport {
        n,
        n_classified: classified,
        coverage: classified as f64 / n as f64,
        correspondence: ratio(matches, classified),
        per_taxon,
        misclassification: ClassRates {
            female: ratio(f_wrong, f_classified),
            male: ratio(m_wrong, m_classified),
        },
        misclassified_female: f_wrong,
        misclassified_male: m_wrong,
        bias_error: f_wrong as i64 - m_wrong as i64,
        composition_estimate: ratio(pred_male, classified),
        composition_target: true_male as f64 / n as f64,
    })
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), sig12)
}

/// Aligned plain-text rendering.
impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = [
            ("n", self.n.to_string()),
            ("classified", self.n_classified.to_string()),
            ("coverage", sig12(self.coverage)),
            ("correspondence", opt(self.correspondence)),
            ("misclassified_female", self.misclassified_female.to_string()),
            ("misclassified_male", self.misclassified_male.to_string()),
            ("misclass_rate_female", opt(self.misclassification.female)),
            ("misclass_rate_male", opt(self.misclassification.male)),
            ("bias_error", self.bias_error.to_string()),
            ("composition_estimate", opt(self.composition_estimate)),
            ("composition_target", sig12(self.composition_target)),
        ];
        for (k, v) in rows {
            writeln!(f, "{k:<22} {v}")?;
        }
        writeln!(f)?;
        writeln!(
            f,
            "{:<32} {:>8} {:>10} {:>8} {:>14} {:>14}",
            "taxon", "count", "classified", "matches", "coverage", "correspondence"
        )?;
        for (t, s) in &self.per_taxon {
            writeln!(
                f,
                "{:<32} {:>8} {:>10} {:>8} {:>14} {:>14}",
                t.as_str(),
                s.count,
                s.classified,
                s.matches,
                sig12(s.coverage),
                opt(s.correspondence)
            )?;
        }
        Ok(())
    }
}
