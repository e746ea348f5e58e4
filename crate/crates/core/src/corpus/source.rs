use std::collections::BTreeMap;
use std::fs::File;
use std::io::Read;
use std::path::Path;

use super::{normalize_name, ContextKey, Country, Decade, DecadeRange, NameKey};
use crate::{Error, Result};

/// Female / male observation weights.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Weights {
    pub female: f64,
    pub male: f64,
}

impl Weights {
    pub fn new(female: f64, male: f64) -> Self {
        Weights { female, male }
    }

    pub fn total(&self) -> f64 {
        self.female + self.male
    }

    /// Female proportion; `None` when both weights are zero.
    pub fn p_female(&self) -> Option<f64> {
        let t = self.total();
        (t > 0.0).then(|| self.female / t)
    }

    pub fn add(&mut self, other: Weights) {
        self.female += other.female;
        self.male += other.male;
    }
}

/// How a source's weights relate to its raw counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Weighting {
    /// As read from disk.
    Raw,
    /// Female and male totals equalized.
    Stratified,
    /// Deliberately left unstratified.
    PassThrough,
}

impl Weighting {
    pub fn as_str(&self) -> &'static str {
        match self {
            Weighting::Raw => "raw",
            Weighting::Stratified => "stratified",
            Weighting::PassThrough => "pass-through",
        }
    }

    pub fn parse(s: &str) -> Option<Weighting> {
        match s {
            "raw" => Some(Weighting::Raw),
            "stratified" => Some(Weighting::Stratified),
            "pass-through" => Some(Weighting::PassThrough),
            _ => None,
        }
    }
}

/// Outcome of [`SourceTable::poststratify`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StratifyReport {
    /// Totals were already equal.
    Balanced,
    /// Female weights multiplied by `factor`.
    UpweightedFemale { factor: f64 },
    /// Male weights multiplied by `factor`.
    UpweightedMale { factor: f64 },
    /// One group has no weight at all; the table is returned unchanged.
    Degenerate,
}

impl StratifyReport {
    pub fn is_warning(&self) -> bool {
        matches!(self, StratifyReport::Degenerate)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IngestOptions {
    pub decades: DecadeRange,
}

const COLUMNS: [&str; 5] = ["name", "decade", "country", "wf", "wm"];

/// One reference source: weights per (name, context).
#[derive(Debug, Clone, PartialEq)]
pub struct SourceTable {
    id: String,
    entries: BTreeMap<(NameKey, ContextKey), Weights>,
    weighting: Weighting,
    skipped_rows: usize,
}

impl SourceTable {
    /// An empty raw table, mostly useful for assembling sources in code.
    pub fn new(id: &str) -> Result<Self> {
        if id.is_empty() {
            return Err(Error::EmptySourceId);
        }
        Ok(SourceTable {
            id: id.to_string(),
            entries: BTreeMap::new(),
            weighting: Weighting::Raw,
            skipped_rows: 0,
        })
    }

    /// Adds weight to an entry, merging with anything already there.
    /// Zero-total additions are ignored.
    pub fn add(&mut self, name: NameKey, context: ContextKey, w: Weights) -> Result<()> {
        if !(w.female >= 0.0 && w.male >= 0.0 && w.female.is_finite() && w.male.is_finite()) {
            return Err(Error::InvalidParam(format!(
                "weights for {name} must be finite and nonnegative"
            )));
        }
        if w.total() > 0.0 {
            self.entries.entry((name, context)).or_default().add(w);
        }
        Ok(())
    }

    /// Reads a standardized source file. `source_id` is usually the file stem.
    pub fn ingest(path: impl AsRef<Path>, source_id: &str, opts: &IngestOptions) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        Self::from_reader_with(file, &path.display().to_string(), source_id, opts)
    }

    pub fn from_reader<R: Read>(reader: R, label: &str, source_id: &str) -> Result<Self> {
        Self::from_reader_with(reader, label, source_id, &IngestOptions::default())
    }

    pub fn from_reader_with<R: Read>(
        reader: R,
        label: &str,
        source_id: &str,
        opts: &IngestOptions,
    ) -> Result<Self> {
        let mut table = SourceTable::new(source_id)?;
        let mut rdr = tsv_reader(reader);

        let header = rdr
            .headers()
            .map_err(|e| Error::parse(label, 1, e.to_string()))?
            .clone();
        if header.is_empty() || (header.len() == 1 && header[0].trim().is_empty()) {
            return Err(Error::EmptyFile(label.to_string()));
        }
        let got: Vec<&str> = header.iter().map(str::trim).collect();
        if got != COLUMNS {
            return Err(Error::parse(
                label,
                1,
                format!("expected header {:?}, found {:?}", COLUMNS.join("\t"), got.join("\t")),
            ));
        }

        let mut rows = 0usize;
        for record in rdr.records() {
            let record = record.map_err(|e| {
                let line = e.position().map_or(0, |p| p.line());
                Error::parse(label, line, e.to_string())
            })?;
            let line = record.position().map_or(0, |p| p.line());
            rows += 1;
            if record.len() != COLUMNS.len() {
                return Err(Error::parse(
                    label,
                    line,
                    format!("expected {} columns, found {}", COLUMNS.len(), record.len()),
                ));
            }
            let decade = Decade::parse_field(record[1].trim(), opts.decades)
                .map_err(|_| Error::parse(label, line, format!("unparsable decade {:?}", &record[1])))?;
            let country = Country::parse_field(record[2].trim())
                .map_err(|_| Error::parse(label, line, format!("invalid country {:?}", &record[2])))?;
            let wf = parse_weight(&record[3], label, line)?;
            let wm = parse_weight(&record[4], label, line)?;

            let Some(name) = normalize_name(&record[0]) else {
                table.skipped_rows += 1;
                continue;
            };
            if wf + wm == 0.0 {
                table.skipped_rows += 1;
                continue;
            }
            table
                .entries
                .entry((name, ContextKey::new(country, decade)))
                .or_default()
                .add(Weights::new(wf, wm));
        }
        if rows == 0 {
            return Err(Error::EmptyFile(label.to_string()));
        }
        Ok(table)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn weighting(&self) -> Weighting {
        self.weighting
    }

    /// Rows dropped at ingestion because the name normalized to nothing or
    /// both weights were zero.
    pub fn skipped_rows(&self) -> usize {
        self.skipped_rows
    }

    pub fn entries(&self) -> &BTreeMap<(NameKey, ContextKey), Weights> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// (female total, male total) over all entries.
    pub fn totals(&self) -> Weights {
        let mut t = Weights::default();
        for w in self.entries.values() {
            t.add(*w);
        }
        t
    }

    /// Equalizes female and male totals by upweighting the smaller group.
    pub fn poststratify(mut self) -> Result<(SourceTable, StratifyReport)> {
        if self.weighting == Weighting::Stratified {
            return Err(Error::AlreadyStratified(self.id));
        }
        let Weights { female, male } = self.totals();
        let report = if female <= 0.0 || male <= 0.0 {
            return Ok((self, StratifyReport::Degenerate));
        } else if female < male {
            let factor = male / female;
            self.entries.values_mut().for_each(|w| w.female *= factor);
            StratifyReport::UpweightedFemale { factor }
        } else if male < female {
            let factor = female / male;
            self.entries.values_mut().for_each(|w| w.male *= factor);
            StratifyReport::UpweightedMale { factor }
        } else {
            StratifyReport::Balanced
        };
        self.weighting = Weighting::Stratified;
        Ok((self, report))
    }

    /// Marks the source as intentionally unstratified.
    pub fn pass_through(mut self) -> SourceTable {
        if self.weighting == Weighting::Raw {
            self.weighting = Weighting::PassThrough;
        }
        self
    }

    pub(crate) fn with_weighting(mut self, weighting: Weighting) -> SourceTable {
        self.weighting = weighting;
        self
    }
}

pub(crate) fn tsv_reader<R: Read>(reader: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .has_headers(true)
        .flexible(true)
        .quoting(false)
        .comment(Some(b'#'))
        .from_reader(reader)
}

fn parse_weight(field: &str, label: &str, line: u64) -> Result<f64> {
    let v: f64 = field
        .trim()
        .parse()
        .map_err(|_| Error::parse(label, line, format!("unparsable weight {field:?}")))?;
    if !v.is_finite() {
        return Err(Error::parse(label, line, format!("non-finite weight {field:?}")));
    }
    if v < 0.0 {
        return Err(Error::parse(label, line, format!("negative weight at line {line}")));
    }
    Ok(v)
}
