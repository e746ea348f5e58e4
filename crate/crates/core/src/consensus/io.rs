use std::io::{BufRead, BufReader, Read, Write};

use crate::corpus::NameKey;
use crate::fmt::sig12;
use crate::{Error, Result};

/// Writes `source_id\tc` rows.
pub fn write_competences<W: Write>(mut w: W, ids: &[String], c: &[f64]) -> std::io::Result<()> {
    writeln!(w, "source_id\tc")?;
    for (id, c) in ids.iter().zip(c) {
        writeln!(w, "{id}\t{}", sig12(*c))?;
    }
    Ok(())
}

/// Writes `name\tz` rows.
pub fn write_consensus<W: Write>(mut w: W, names: &[NameKey], z: &[f64]) -> std::io::Result<()> {
    writeln!(w, "name\tz")?;
    for (name, z) in names.iter().zip(z) {
        writeln!(w, "{name}\t{}", sig12(*z))?;
    }
    Ok(())
}

fn read_pairs<R: Read>(r: R, label: &str, header: &str) -> Result<Vec<(String, f64, u64)>> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(r).lines().enumerate() {
        let line = line.map_err(|e| Error::io(label, e))?;
        let lineno = i as u64 + 1;
        if i == 0 {
            if line != header {
                return Err(Error::parse(label, 1, format!("expected header {header:?}")));
            }
            continue;
        }
        let (key, value) = line
            .split_once('\t')
            .ok_or_else(|| Error::parse(label, lineno, "expected two columns"))?;
        let v: f64 = value
            .parse()
            .map_err(|_| Error::parse(label, lineno, format!("bad number {value:?}")))?;
        out.push((key.to_string(), v, lineno));
    }
    Ok(out)
}

pub fn read_competences<R: Read>(r: R, label: &str) -> Result<Vec<(String, f64)>> {
    Ok(read_pairs(r, label, "source_id\tc")?
        .into_iter()
        .map(|(k, v, _)| (k, v))
        .collect())
}

pub fn read_consensus<R: Read>(r: R, label: &str) -> Result<Vec<(NameKey, f64)>> {
    read_pairs(r, label, "name\tz")?
        .into_iter()
        .map(|(k, v, line)| {
            let key = NameKey::try_from(k).map_err(|e| Error::parse(label, line, e))?;
            Ok((key, v))
        })
        .collect()
}
