use std::collections::{BTreeMap, BTreeSet};
use std::io::{Read, Write};

use super::source::tsv_reader;
use super::{normalize_name, ContextKey, Country, Decade, DecadeRange, NameKey};
use super::{SourceTable, Weighting, Weights};
use crate::{Error, Result};

/// Per-source metadata kept in a [`NameTable`].
#[derive(Debug, Clone, PartialEq)]
pub struct SourceInfo {
    pub id: String,
    pub weighting: Weighting,
    /// Female / male totals over the whole source (after stratification).
    pub totals: Weights,
    pub n_names: usize,
}

/// All observations of one name, by source index and context.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NameRecord {
    by_source: BTreeMap<usize, BTreeMap<ContextKey, Weights>>,
    total: Weights,
}

impl NameRecord {
    /// Source indices (into [`NameTable::sources`]) with their contexts.
    pub fn sources(&self) -> impl Iterator<Item = (usize, &BTreeMap<ContextKey, Weights>)> {
        self.by_source.iter().map(|(i, c)| (*i, c))
    }

    /// Weights pooled over every source and context.
    pub fn pooled(&self) -> Weights {
        self.total
    }

    pub fn total_weight(&self) -> f64 {
        self.total.total()
    }

    /// Pooled female proportion over all sources and contexts.
    pub fn p_female(&self) -> f64 {
        self.total.female / self.total.total()
    }

    /// Per-source weights restricted to contexts accepted by `keep`.
    /// Sources with no remaining weight are omitted.
    pub fn source_weights_where<F>(&self, keep: F) -> Vec<(usize, Weights)>
    where
        F: Fn(&ContextKey) -> bool,
    {
        self.by_source
            .iter()
            .filter_map(|(&i, contexts)| {
                let mut w = Weights::default();
                for (ctx, cw) in contexts {
                    if keep(ctx) {
                        w.add(*cw);
                    }
                }
                (w.total() > 0.0).then_some((i, w))
            })
            .collect()
    }

    /// Mean over sources of each source's female proportion, restricted to
    /// contexts accepted by `keep`. `None` when no source has weight there.
    pub fn source_average_where<F>(&self, keep: F) -> Option<f64>
    where
        F: Fn(&ContextKey) -> bool,
    {
        let props: Vec<f64> = self
            .source_weights_where(keep)
            .into_iter()
            .filter_map(|(_, w)| w.p_female())
            .collect();
        if props.is_empty() {
            None
        } else {
            Some(props.iter().sum::<f64>() / props.len() as f64)
        }
    }

    /// Every (context, weights) pair, pooled over sources.
    pub fn contexts(&self) -> BTreeMap<ContextKey, Weights> {
        let mut out: BTreeMap<ContextKey, Weights> = BTreeMap::new();
        for contexts in self.by_source.values() {
            for (ctx, w) in contexts {
                out.entry(*ctx).or_default().add(*w);
            }
        }
        out
    }
}

/// The aggregated reference corpus. Names never observed are absent.
#[derive(Debug, Clone, PartialEq)]
pub struct NameTable {
    sources: Vec<SourceInfo>,
    names: BTreeMap<NameKey, NameRecord>,
    country_totals: BTreeMap<Country, f64>,
    decade_totals: BTreeMap<Decade, f64>,
    joint_totals: BTreeMap<(Country, Decade), f64>,
}

impl NameTable {
    /// Aggregates sources by name. Sources are ordered by id, so the result
    /// does not depend on the order they are passed in.
    pub fn build(mut sources: Vec<SourceTable>) -> Result<NameTable> {
        if sources.is_empty() {
            return Err(Error::NoSources);
        }
        sources.sort_by(|a, b| a.id().cmp(b.id()));
        for pair in sources.windows(2) {
            if pair[0].id() == pair[1].id() {
                return Err(Error::DuplicateSource(pair[0].id().to_string()));
            }
        }
        if let Some(raw) = sources.iter().find(|s| s.weighting() == Weighting::Raw) {
            return Err(Error::Unstratified(raw.id().to_string()));
        }

        let mut infos = Vec::with_capacity(sources.len());
        let mut names: BTreeMap<NameKey, NameRecord> = BTreeMap::new();
        for (idx, source) in sources.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for ((name, ctx), w) in source.entries() {
                seen.insert(name);
                let rec = names.entry(name.clone()).or_default();
                rec.by_source.entry(idx).or_default().insert(*ctx, *w);
            }
            infos.push(SourceInfo {
                id: source.id().to_string(),
                weighting: source.weighting(),
                totals: source.totals(),
                n_names: seen.len(),
            });
        }

        let mut country_totals: BTreeMap<Country, f64> = BTreeMap::new();
        let mut decade_totals: BTreeMap<Decade, f64> = BTreeMap::new();
        let mut joint_totals: BTreeMap<(Country, Decade), f64> = BTreeMap::new();
        for rec in names.values_mut() {
            let mut total = Weights::default();
            for contexts in rec.by_source.values() {
                for (ctx, w) in contexts {
                    total.add(*w);
                    if let Some(c) = ctx.country {
                        *country_totals.entry(c).or_default() += w.total();
                    }
                    if let Some(d) = ctx.decade {
                        *decade_totals.entry(d).or_default() += w.total();
                    }
                    if let (Some(c), Some(d)) = (ctx.country, ctx.decade) {
                        *joint_totals.entry((c, d)).or_default() += w.total();
                    }
                }
            }
            rec.total = total;
        }

        Ok(NameTable {
            sources: infos,
            names,
            country_totals,
            decade_totals,
            joint_totals,
        })
    }

    /// Sources in id order; [`NameRecord`] indices point into this slice.
    pub fn sources(&self) -> &[SourceInfo] {
        &self.sources
    }

    pub fn source_index(&self, id: &str) -> Option<usize> {
        self.sources.binary_search_by(|s| s.id.as_str().cmp(id)).ok()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &NameKey> {
        self.names.keys()
    }

    pub fn records(&self) -> impl Iterator<Item = (&NameKey, &NameRecord)> {
        self.names.iter()
    }

    pub fn get(&self, name: &NameKey) -> Option<&NameRecord> {
        self.names.get(name)
    }

    /// Normalizes `raw` and looks it up.
    pub fn lookup(&self, raw: &str) -> Option<(NameKey, &NameRecord)> {
        let key = normalize_name(raw)?;
        let rec = self.names.get(&key)?;
        Some((key, rec))
    }

    pub fn total_weight(&self, name: &NameKey) -> Option<f64> {
        self.get(name).map(NameRecord::total_weight)
    }

    /// Female proportion of `name` within each source that reports it.
    pub fn p_f_by_source(&self, name: &NameKey) -> Option<Vec<(&str, f64)>> {
        let rec = self.get(name)?;
        Some(
            rec.source_weights_where(|_| true)
                .into_iter()
                .filter_map(|(i, w)| Some((self.sources[i].id.as_str(), w.p_female()?)))
                .collect(),
        )
    }

    /// Total weight of all names observed in `country` (any decade).
    pub fn country_total(&self, country: Country) -> f64 {
        self.country_totals.get(&country).copied().unwrap_or(0.0)
    }

    /// Total weight of all names observed in `decade` (any country).
    pub fn decade_total(&self, decade: Decade) -> f64 {
        self.decade_totals.get(&decade).copied().unwrap_or(0.0)
    }

    pub fn joint_total(&self, country: Country, decade: Decade) -> f64 {
        self.joint_totals.get(&(country, decade)).copied().unwrap_or(0.0)
    }

    /// Countries observed anywhere in the corpus.
    pub fn countries(&self) -> impl Iterator<Item = Country> + '_ {
        self.country_totals.keys().copied()
    }

    /// Decades observed anywhere in the corpus.
    pub fn decades(&self) -> impl Iterator<Item = Decade> + '_ {
        self.decade_totals.keys().copied()
    }

    /// Every country key present, including the unknown sentinel when used.
    pub fn country_keys(&self) -> Vec<Option<Country>> {
        let mut keys = BTreeSet::new();
        for rec in self.names.values() {
            for contexts in rec.by_source.values() {
                keys.extend(contexts.keys().map(|c| c.country));
            }
        }
        keys.into_iter().collect()
    }

    /// Copy with female and male weights exchanged everywhere.
    pub fn swapped_genders(&self) -> NameTable {
        self.map_weights(|w| Weights::new(w.male, w.female))
    }

    /// Copy with every weight multiplied by `k > 0`.
    pub fn scaled(&self, k: f64) -> NameTable {
        self.map_weights(|w| Weights::new(w.female * k, w.male * k))
    }

    fn map_weights(&self, f: impl Fn(Weights) -> Weights) -> NameTable {
        let sources = self
            .to_sources()
            .into_iter()
            .map(|s| {
                let weighting = s.weighting();
                let mut out = SourceTable::new(s.id()).expect("nonempty id");
                for ((name, ctx), w) in s.entries() {
                    out.add(name.clone(), *ctx, f(*w)).expect("valid weights");
                }
                out.with_weighting(weighting)
            })
            .collect();
        NameTable::build(sources).expect("sources already validated")
    }

    /// Splits the table back into per-source tables.
    pub fn to_sources(&self) -> Vec<SourceTable> {
        let mut out: Vec<SourceTable> = self
            .sources
            .iter()
            .map(|s| {
                SourceTable::new(&s.id)
                    .expect("nonempty id")
                    .with_weighting(s.weighting)
            })
            .collect();
        for (name, rec) in &self.names {
            for (&i, contexts) in &rec.by_source {
                for (ctx, w) in contexts {
                    out[i].add(name.clone(), *ctx, *w).expect("valid weights");
                }
            }
        }
        out
    }

    /// Writes the table as TSV: `#source` preamble lines, then columns
    /// `name, source_id, country, decade, wf, wm`.
    pub fn write_tsv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for s in &self.sources {
            writeln!(w, "#source\t{}\t{}", s.id, s.weighting.as_str())?;
        }
        writeln!(w, "name\tsource_id\tcountry\tdecade\twf\twm")?;
        for (name, rec) in &self.names {
            for (&i, contexts) in &rec.by_source {
                for (ctx, cw) in contexts {
                    writeln!(
                        w,
                        "{}\t{}\t{}\t{}\t{}\t{}",
                        name,
                        self.sources[i].id,
                        ctx.country_field(),
                        ctx.decade_field(),
                        cw.female,
                        cw.male
                    )?;
                }
            }
        }
        Ok(())
    }

    pub fn read_tsv<R: Read>(reader: R, label: &str) -> Result<NameTable> {
        let mut buf = String::new();
        let mut reader = reader;
        reader
            .read_to_string(&mut buf)
            .map_err(|e| Error::io(label, e))?;

        let mut sources: BTreeMap<String, SourceTable> = BTreeMap::new();
        for (i, line) in buf.lines().enumerate() {
            let Some(rest) = line.strip_prefix("#source\t") else {
                continue;
            };
            let mut parts = rest.split('\t');
            let id = parts.next().unwrap_or_default();
            let weighting = parts
                .next()
                .and_then(Weighting::parse)
                .ok_or_else(|| Error::parse(label, i as u64 + 1, "bad #source line"))?;
            let table = SourceTable::new(id)?.with_weighting(weighting);
            if sources.insert(id.to_string(), table).is_some() {
                return Err(Error::DuplicateSource(id.to_string()));
            }
        }

        let mut rdr = tsv_reader(buf.as_bytes());
        let header = rdr
            .headers()
            .map_err(|e| Error::parse(label, 1, e.to_string()))?
            .clone();
        let expected = ["name", "source_id", "country", "decade", "wf", "wm"];
        if header.iter().collect::<Vec<_>>() != expected {
            return Err(Error::parse(label, 0, "expected corpus header name\tsource_id\tcountry\tdecade\twf\twm"));
        }
        let decades = DecadeRange {
            min: i32::from(i16::MIN),
            max: i32::from(i16::MAX),
        };
        for record in rdr.records() {
            let record = record.map_err(|e| Error::parse(label, 0, e.to_string()))?;
            let line = record.position().map_or(0, |p| p.line());
            if record.len() != 6 {
                return Err(Error::parse(label, line, format!("expected 6 columns, found {}", record.len())));
            }
            let name = NameKey::try_from(record[0].to_string()).map_err(|e| Error::parse(label, line, e))?;
            let country = Country::parse_field(&record[2]).map_err(|e| Error::parse(label, line, e.to_string()))?;
            let decade =
                Decade::parse_field(&record[3], decades).map_err(|e| Error::parse(label, line, e.to_string()))?;
            let num = |s: &str| -> Result<f64> {
                s.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite() && *v >= 0.0)
                    .ok_or_else(|| Error::parse(label, line, format!("bad weight {s:?}")))
            };
            let w = Weights::new(num(&record[4])?, num(&record[5])?);
            let source = sources.entry(record[1].to_string()).or_insert_with(|| {
                SourceTable::new(&record[1])
                    .map(|s| s.with_weighting(Weighting::PassThrough))
                    .expect("csv fields are nonempty here")
            });
            source.add(name, ContextKey::new(country, decade), w)?;
        }
        NameTable::build(sources.into_values().collect())
    }
}
