use std::path::Path;

use anyhow::{bail, Context};
use namegender::corpus::Country;

pub struct InputSpec {
    pub name_col: usize,
    pub countries_col: Option<usize>,
    pub header: bool,
}

pub struct InputRow {
    pub name: String,
    /// Empty when no country column was requested or the cell is blank.
    pub countries: Vec<Option<Country>>,
}

/// Reads names, one per line, optionally from tab-separated columns. Blank
/// lines are skipped.
pub fn read_names(path: &Path, spec: &InputSpec) -> anyhow::Result<Vec<InputRow>> {
    if spec.name_col == 0 || spec.countries_col == Some(0) {
        bail!("column numbers start at 1");
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate().skip(usize::from(spec.header)) {
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split('\t').collect();
        let at = |col: usize| cells.get(col - 1).copied();
        let Some(name) = at(spec.name_col) else {
            bail!("{}:{}: no column {}", path.display(), i + 1, spec.name_col);
        };
        let countries = match spec.countries_col.and_then(at).map(str::trim) {
            None | Some("") => Vec::new(),
            Some(list) => Country::parse_list(list).with_context(|| format!("{}:{}", path.display(), i + 1))?,
        };
        rows.push(InputRow { name: name.to_string(), countries });
    }
    Ok(rows)
}
