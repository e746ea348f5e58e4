//! Reference corpus: name normalization, per-source ingestion and
//! post-stratification, and the aggregated [`NameTable`].

mod context;
mod name;
mod source;
mod table;

pub use context::{ContextKey, Country, Decade, DecadeRange};
pub use name::{normalize_name, NameKey};
pub use source::{IngestOptions, SourceTable, StratifyReport, Weighting, Weights};
pub use table::{NameRecord, NameTable, SourceInfo};
pub(crate) use source::tsv_reader;

/// Builds a [`NameTable`] from sources. See [`NameTable::build`].
pub fn build_name_table(sources: Vec<SourceTable>) -> crate::Result<NameTable> {
    NameTable::build(sources)
}

/// Reads one standardized source file. See [`SourceTable::ingest`].
pub fn ingest_source(
    path: impl AsRef<std::path::Path>,
    source_id: &str,
) -> crate::Result<SourceTable> {
    SourceTable::ingest(path, source_id, &IngestOptions::default())
}
