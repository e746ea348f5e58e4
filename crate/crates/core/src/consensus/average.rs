use std::collections::BTreeMap;

use crate::corpus::{NameKey, NameRecord, NameTable};

/// Unweighted mean over sources of each source's female proportion for one
/// name. Every source counts equally regardless of size.
pub fn average_p_f(record: &NameRecord) -> Option<f64> {
    record.source_average_where(|_| true)
}

/// [`average_p_f`] for every name in the table.
pub fn average_consensus(table: &NameTable) -> BTreeMap<NameKey, f64> {
    table
        .records()
        .filter_map(|(name, rec)| Some((name.clone(), average_p_f(rec)?)))
        .collect()
}
