//! Turning consensus estimates into female / male / unclassified labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::consensus::{average_consensus, binarize_reports, cct_fit, ConsensusFit, FitOptions};
use crate::corpus::{normalize_name, Country, Decade, DecadeRange, NameKey, NameTable};
use crate::fmt::sig12;
use crate::taxonomy::{assign_taxon, TaxonLabel, TaxonomyParams};
use crate::{Error, Result};

/// A validation label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gender {
    Female,
    Male,
}

impl Gender {
    /// Accepts `F`/`M`/`female`/`male` in any case.
    pub fn parse(s: &str) -> Option<Gender> {
        match s.trim().to_ascii_lowercase().as_str() {
            "f" | "female" => Some(Gender::Female),
            "m" | "male" => Some(Gender::Male),
            _ => None,
        }
    }
}

/// Classifier output label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    Female,
    Male,
    Unclassified,
}

impl Label {
    pub fn as_str(&self) -> &'static str {
        match self {
            Label::Female => "female",
            Label::Male => "male",
            Label::Unclassified => "unclassified",
        }
    }

    pub fn parse(s: &str) -> Option<Label> {
        match s {
            "female" => Some(Label::Female),
            "male" => Some(Label::Male),
            "unclassified" => Some(Label::Unclassified),
            _ => None,
        }
    }

    pub fn is_classified(&self) -> bool {
        *self != Label::Unclassified
    }

    /// True when this label is the given validation label.
    pub fn matches(&self, g: Gender) -> bool {
        matches!(
            (self, g),
            (Label::Female, Gender::Female) | (Label::Male, Gender::Male)
        )
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a classification's probability came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    Average,
    Cct,
    CountryConditioned(Vec<Option<Country>>),
    DecadeConditioned(Vec<Decade>),
    MajorityGuess,
}

impl Basis {
    /// Inverse of the `Display` form.
    pub fn parse(s: &str) -> Option<Basis> {
        match s {
            "average" => return Some(Basis::Average),
            "cct" => return Some(Basis::Cct),
            "majority" => return Some(Basis::MajorityGuess),
            _ => {}
        }
        if let Some(list) = s.strip_prefix("country:") {
            return Country::parse_list(list).ok().map(Basis::CountryConditioned);
        }
        let list = s.strip_prefix("decade:")?;
        list.split(',')
            .map(|d| Decade::parse_field(d, DecadeRange::default()).ok().flatten())
            .collect::<Option<Vec<_>>>()
            .map(Basis::DecadeConditioned)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Average => f.write_str("average"),
            Basis::Cct => f.write_str("cct"),
            Basis::MajorityGuess => f.write_str("majority"),
            Basis::CountryConditioned(cs) => {
                let codes: Vec<String> = cs
                    .iter()
                    .map(|c| c.map_or_else(|| "--".to_string(), |c| c.to_string()))
                    .collect();
                write!(f, "country:{}", codes.join(","))
            }
            Basis::DecadeConditioned(ds) => {
                let ds: Vec<String> = ds.iter().map(Decade::to_string).collect();
                write!(f, "decade:{}", ds.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub label: Label,
    /// Estimated probability the name is gendered female.
    pub p_f: Option<f64>,
    pub basis: Basis,
    pub taxon: TaxonLabel,
    pub normalized: Option<NameKey>,
    /// Set when a conditioned request had no data and the global result was
    /// used instead.
    pub fallback: bool,
}

/// Female above `0.5 + band`, male below `0.5 - band`, otherwise (or with no
/// estimate) unclassified.
pub fn threshold(p_f: Option<f64>, band: f64) -> Label {
    match p_f {
        Some(p) if p > 0.5 + band => Label::Female,
        Some(p) if p < 0.5 - band => Label::Male,
        _ => Label::Unclassified,
    }
}

/// Per-name female probabilities backing a [`Classifier`].
#[derive(Debug, Clone, PartialEq)]
pub enum Estimator {
    /// Equal-competence source average.
    Average(BTreeMap<NameKey, f64>),
    /// Consensus-model posterior `z`.
    Cct(BTreeMap<NameKey, f64>),
}

impl Estimator {
    pub fn average(table: &NameTable) -> Estimator {
        Estimator::Average(average_consensus(table))
    }

    /// Binarizes the table and fits the consensus model; returns the
    /// estimator together with the fit.
    pub fn cct(table: &NameTable, opts: &FitOptions) -> Result<(Estimator, ConsensusFit)> {
        let b = binarize_reports(table)?;
        let fit = cct_fit(&b.matrix, opts)?;
        let z = b.names.into_iter().zip(fit.z().iter().copied()).collect();
        Ok((Estimator::Cct(z), fit))
    }

    pub fn p_f(&self, name: &NameKey) -> Option<f64> {
        match self {
            Estimator::Average(m) | Estimator::Cct(m) => m.get(name).copied(),
        }
    }

    fn basis(&self) -> Basis {
        match self {
            Estimator::Average(_) => Basis::Average,
            Estimator::Cct(_) => Basis::Cct,
        }
    }
}

/// Classifies raw names against a reference table.
#[derive(Debug, Clone)]
pub struct Classifier<'a> {
    table: &'a NameTable,
    estimator: Estimator,
    band: f64,
    taxonomy: TaxonomyParams,
}

impl<'a> Classifier<'a> {
    pub fn new(table: &'a NameTable, estimator: Estimator, band: f64) -> Result<Self> {
        Self::with_taxonomy(table, estimator, band, TaxonomyParams::default())
    }

    pub fn with_taxonomy(
        table: &'a NameTable,
        estimator: Estimator,
        band: f64,
        taxonomy: TaxonomyParams,
    ) -> Result<Self> {
        if !(0.0..=0.5).contains(&band) {
            return Err(Error::InvalidParam(format!("band {band} must lie in [0, 0.5]")));
        }
        taxonomy.validate()?;
        Ok(Classifier {
            table,
            estimator,
            band,
            taxonomy,
        })
    }

    pub fn table(&self) -> &NameTable {
        self.table
    }

    pub fn estimator(&self) -> &Estimator {
        &self.estimator
    }

    pub fn band(&self) -> f64 {
        self.band
    }

    fn taxon(&self, key: Option<&NameKey>) -> TaxonLabel {
        key.map_or(TaxonLabel::NoData, |k| assign_taxon(k, self.table, &self.taxonomy))
    }

    /// Global classification of one raw name.
    pub fn classify(&self, raw: &str) -> Classification {
        let key = normalize_name(raw);
        let present = key.as_ref().filter(|k| self.table.get(k).is_some());
        let p_f = present.and_then(|k| self.estimator.p_f(k));
        Classification {
            label: threshold(p_f, self.band),
            p_f,
            basis: self.estimator.basis(),
            taxon: self.taxon(present),
            normalized: key,
            fallback: false,
        }
    }

    /// Classification using only reference weight from `countries`, pooled,
    /// averaged per source. `None` in the list selects unknown-country data.
    /// Falls back to [`classify`](Self::classify) when the restriction
    /// leaves no weight.
    pub fn classify_conditioned(&self, raw: &str, countries: &[Option<Country>]) -> Result<Classification> {
        if countries.is_empty() {
            return Err(Error::EmptyCountryList);
        }
        let wanted: BTreeSet<Option<Country>> = countries.iter().copied().collect();
        let basis = Basis::CountryConditioned(wanted.iter().copied().collect());
        Ok(self.restricted(raw, basis, |ctx| wanted.contains(&ctx.country)))
    }

    /// Same as [`classify_conditioned`](Self::classify_conditioned) but over
    /// decades.
    pub fn classify_decade_conditioned(&self, raw: &str, decades: &[Decade]) -> Result<Classification> {
        if decades.is_empty() {
            return Err(Error::InvalidParam("decade list must be nonempty".into()));
        }
        let wanted: BTreeSet<Decade> = decades.iter().copied().collect();
        let basis = Basis::DecadeConditioned(wanted.iter().copied().collect());
        Ok(self.restricted(raw, basis, |ctx| ctx.decade.is_some_and(|d| wanted.contains(&d))))
    }

    fn restricted<F>(&self, raw: &str, basis: Basis, keep: F) -> Classification
    where
        F: Fn(&crate::corpus::ContextKey) -> bool,
    {
        let key = normalize_name(raw);
        let p_f = key
            .as_ref()
            .and_then(|k| self.table.get(k))
            .and_then(|rec| rec.source_average_where(keep));
        match p_f {
            Some(p) => Classification {
                label: threshold(Some(p), self.band),
                p_f: Some(p),
                basis,
                taxon: self.taxon(key.as_ref()),
                normalized: key,
                fallback: false,
            },
            None => Classification {
                fallback: true,
                ..self.classify(raw)
            },
        }
    }
}

/// Female / male counts seen in some labeled data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassCounts {
    pub female: usize,
    pub male: usize,
}

/// Assigns every input the majority class of the counts it was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MajorityGuess {
    label: Label,
}

/// Builds the "always guess the majority class" baseline. Ties give a
/// classifier that never classifies.
pub fn guess_majority(counts: ClassCounts) -> Result<MajorityGuess> {
    if counts.female == 0 && counts.male == 0 {
        return Err(Error::InvalidParam("class counts are all zero".into()));
    }
    let label = match counts.female.cmp(&counts.male) {
        std::cmp::Ordering::Greater => Label::Female,
        std::cmp::Ordering::Less => Label::Male,
        std::cmp::Ordering::Equal => Label::Unclassified,
    };
    Ok(MajorityGuess { label })
}

impl MajorityGuess {
    pub fn label(&self) -> Label {
        self.label
    }

    /// Classifies `raw`; the table is only consulted for the taxon.
    pub fn classify(&self, raw: &str, table: &NameTable, params: &TaxonomyParams) -> Classification {
        let key = normalize_name(raw);
        let taxon = key
            .as_ref()
            .map_or(TaxonLabel::NoData, |k| assign_taxon(k, table, params));
        Classification {
            label: self.label,
            p_f: None,
            basis: Basis::MajorityGuess,
            taxon,
            normalized: key,
            fallback: false,
        }
    }
}

/// Header of batch classification TSV.
pub const CLASSIFICATION_HEADER: &str = "name\tnormalized\tlabel\tp_f\tbasis\ttaxon\tfallback";

/// Writes one row per `(raw input, classification)`, in order.
pub fn write_classifications<W: Write>(mut w: W, rows: &[(String, Classification)]) -> std::io::Result<()> {
    writeln!(w, "{CLASSIFICATION_HEADER}")?;
    for (raw, c) in rows {
        writeln!(
            w,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            raw,
            c.normalized.as_ref().map_or("", |k| k.as_str()),
            c.label,
            c.p_f.map(sig12).unwrap_or_default(),
            c.basis,
            c.taxon.as_str(),
            u8::from(c.fallback)
        )?;
    }
    Ok(())
}

/// Reads what [`write_classifications`] wrote.
pub fn read_classifications<R: Read>(reader: R, label: &str) -> Result<Vec<(String, Classification)>> {
    let mut rdr = crate::corpus::tsv_reader(reader);
    let header = rdr.headers().map_err(|e| Error::parse(label, 1, e.to_string()))?;
    if header.is_empty() {
        return Err(Error::EmptyFile(label.to_string()));
    }
    if header.iter().collect::<Vec<_>>().join("\t") != CLASSIFICATION_HEADER {
        return Err(Error::parse(label, 1, "not a classification file"));
    }
    let mut out = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| Error::parse(label, 0, e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line());
        let fields: Vec<&str> = record.iter().collect();
        let bad = |what: &str| Error::parse(label, line, format!("bad {what}"));
        if fields.len() != 7 {
            return Err(bad("column count"));
        }
        let normalized = match fields[1] {
            "" => None,
            s => Some(NameKey::try_from(s.to_string()).map_err(|_| bad("normalized name"))?),
        };
        let p_f = match fields[3] {
            "" => None,
            s => Some(s.parse::<f64>().map_err(|_| bad("p_f"))?),
        };
        out.push((
            fields[0].to_string(),
            Classification {
                label: Label::parse(fields[2]).ok_or_else(|| bad("label"))?,
                p_f,
                basis: Basis::parse(fields[4]).ok_or_else(|| bad("basis"))?,
                taxon: TaxonLabel::parse(fields[5]).ok_or_else(|| bad("taxon"))?,
                normalized,
                fallback: match fields[6] {
                    "0" => false,
                    "1" => true,
                    _ => return Err(bad("fallback flag")),
                },
            },
        ));
    }
    Ok(out)
}
