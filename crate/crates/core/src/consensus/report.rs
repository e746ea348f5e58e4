use crate::corpus::{NameKey, NameTable};
use crate::{Error, Result};

/// Sparse binary reports. Absent (source, name) pairs are missing data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportMatrix {
    by_name: Vec<Vec<(u32, bool)>>,
    by_source: Vec<Vec<(u32, bool)>>,
}

impl ReportMatrix {
    /// Builds a matrix from `(source, name, report)` triplets. Every source
    /// must report at least one name and every name must be reported.
    pub fn from_triplets<I>(n_sources: usize, n_names: usize, reports: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, bool)>,
    {
        let mut by_name = vec![Vec::new(); n_names];
        let mut by_source = vec![Vec::new(); n_sources];
        for (n, m, x) in reports {
            if n >= n_sources || m >= n_names {
                return Err(Error::InvalidMatrix(format!("report ({n}, {m}) out of range")));
            }
            by_name[m].push((n as u32, x));
            by_source[n].push((m as u32, x));
        }
        for (m, row) in by_name.iter_mut().enumerate() {
            row.sort_unstable();
            if row.is_empty() {
                return Err(Error::InvalidMatrix(format!("name {m} has no reports")));
            }
            if row.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::InvalidMatrix(format!("name {m} reported twice by one source")));
            }
        }
        for (n, row) in by_source.iter_mut().enumerate() {
            row.sort_unstable();
            if row.is_empty() {
                return Err(Error::InvalidMatrix(format!("source {n} reports no names")));
            }
        }
        Ok(ReportMatrix { by_name, by_source })
    }

    /// Fully observed matrix from rows indexed `[source][name]`.
    pub fn dense(rows: &[Vec<bool>]) -> Result<Self> {
        let n_names = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_names) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Self::from_triplets(
            rows.len(),
            n_names,
            rows.iter()
                .enumerate()
                .flat_map(|(n, r)| r.iter().enumerate().map(move |(m, &x)| (n, m, x))),
        )
    }

    pub fn n_sources(&self) -> usize {
        self.by_source.len()
    }

    pub fn n_names(&self) -> usize {
        self.by_name.len()
    }

    pub fn n_reports(&self) -> usize {
        self.by_source.iter().map(Vec::len).sum()
    }

    pub fn get(&self, source: usize, name: usize) -> Option<bool> {
        let row = &self.by_source[source];
        row.binary_search_by_key(&(name as u32), |&(m, _)| m)
            .ok()
            .map(|i| row[i].1)
    }

    /// Reports on `name` as `(source, x)`, ordered by source.
    pub fn name_reports(&self, name: usize) -> &[(u32, bool)] {
        &self.by_name[name]
    }

    /// Reports by `source` as `(name, x)`, ordered by name.
    pub fn source_reports(&self, source: usize) -> &[(u32, bool)] {
        &self.by_source[source]
    }

    fn triplets(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        self.by_source
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().map(move |&(m, x)| (n, m as usize, x)))
    }

    /// Every report inverted.
    pub fn flipped(&self) -> ReportMatrix {
        let flip = |rows: &Vec<Vec<(u32, bool)>>| {
            rows.iter()
                .map(|r| r.iter().map(|&(i, x)| (i, !x)).collect())
                .collect()
        };
        ReportMatrix {
            by_name: flip(&self.by_name),
            by_source: flip(&self.by_source),
        }
    }

    /// Relabels sources and names: old source `n` becomes `source_perm[n]`,
    /// old name `m` becomes `name_perm[m]`.
    pub fn permuted(&self, source_perm: &[usize], name_perm: &[usize]) -> Result<ReportMatrix> {
        if source_perm.len() != self.n_sources() || name_perm.len() != self.n_names() {
            return Err(Error::InvalidMatrix("permutation length mismatch".into()));
        }
        Self::from_triplets(
            self.n_sources(),
            self.n_names(),
            self.triplets().map(|(n, m, x)| (source_perm[n], name_perm[m], x)),
        )
    }
}

/// Reports derived from a [`NameTable`], with index maps back to ids.
#[derive(Debug, Clone)]
pub struct BinarizedReports {
    pub matrix: ReportMatrix,
    /// Source id per matrix row.
    pub source_ids: Vec<String>,
    /// Name per matrix column.
    pub names: Vec<NameKey>,
    /// Names whose every report was an exact tie.
    pub skipped_names: Vec<NameKey>,
    /// Sources left with no directional report.
    pub skipped_sources: Vec<String>,
}

const TIE: f64 = 1e-12;

/// Turns per-source female proportions into binary reports: `x = 1` above
/// one half, `x = 0` below, missing at an exact tie.
pub fn binarize_reports(table: &NameTable) -> Result<BinarizedReports> {
    if table.is_empty() {
        return Err(Error::InvalidMatrix("empty name table".into()));
    }
    let n_all = table.sources().len();
    let mut raw: Vec<(usize, usize, bool)> = Vec::new();
    let mut names = Vec::new();
    let mut skipped_names = Vec::new();
    let mut source_used = vec![false; n_all];
    for (name, rec) in table.records() {
        let col = names.len();
        let before = raw.len();
        for (src, w) in rec.source_weights_where(|_| true) {
            let Some(p) = w.p_female() else { continue };
            if (p - 0.5).abs() <= TIE {
                continue;
            }
            raw.push((src, col, p > 0.5));
            source_used[src] = true;
        }
        if raw.len() == before {
            skipped_names.push(name.clone());
        } else {
            names.push(name.clone());
        }
    }

    let mut row_of = vec![usize::MAX; n_all];
    let mut source_ids = Vec::new();
    let mut skipped_sources = Vec::new();
    for (i, info) in table.sources().iter().enumerate() {
        if source_used[i] {
            row_of[i] = source_ids.len();
            source_ids.push(info.id.clone());
        } else {
            skipped_sources.push(info.id.clone());
        }
    }
    if names.is_empty() {
        return Err(Error::InvalidMatrix("every report is a tie".into()));
    }
    let matrix = ReportMatrix::from_triplets(
        source_ids.len(),
        names.len(),
        raw.into_iter().map(|(s, m, x)| (row_of[s], m, x)),
    )?;
    Ok(BinarizedReports {
        matrix,
        source_ids,
        names,
        skipped_names,
        skipped_sources,
    })
}
