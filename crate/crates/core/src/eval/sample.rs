use std::io::Read;

use crate::classify::Gender;
use crate::corpus::Country;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledRow {
    pub name: String,
    pub label: Gender,
    /// Country hints; empty when none were given.
    pub countries: Vec<Option<Country>>,
}

/// Individuals with binary validation labels.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSample {
    rows: Vec<LabeledRow>,
}

impl LabeledSample {
    pub fn new(rows: Vec<LabeledRow>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptySample);
        }
        Ok(LabeledSample { rows })
    }

    pub fn rows(&self) -> &[LabeledRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reads TSV with header columns `name`, `label` and optionally
    /// `country` (comma-separated codes).
    pub fn read_tsv<R: Read>(reader: R, label: &str) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .delimiter(b'\t')
            .flexible(true)
            .quoting(false)
            .from_reader(reader);
        let header = rdr
            .headers()
            .map_err(|e| Error::parse(label, 1, e.to_string()))?
            .clone();
        let col = |n: &str| header.iter().position(|h| h.trim() == n);
        let name_col = col("name").ok_or_else(|| Error::parse(label, 1, "missing column \"name\""))?;
        let label_col = col("label").ok_or_else(|| Error::parse(label, 1, "missing column \"label\""))?;
        let country_col = col("country");

        let mut rows = Vec::new();
        for record in rdr.records() {
            let record = record.map_err(|e| Error::parse(label, 0, e.to_string()))?;
            let line = record.position().map_or(0, |p| p.line());
            let field = |i: usize| record.get(i).unwrap_or("");
            let g = Gender::parse(field(label_col))
                .ok_or_else(|| Error::parse(label, line, format!("label {:?} is not F or M", field(label_col))))?;
            let countries = match country_col {
                Some(i) => Country::parse_list(field(i)).map_err(|e| Error::parse(label, line, e.to_string()))?,
                None => Vec::new(),
            };
            rows.push(LabeledRow {
                name: field(name_col).to_string(),
                label: g,
                countries,
            });
        }
        LabeledSample::new(rows)
    }
}
