use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Tsv,
    Json,
}

/// Optional settings file. Keys mirror the long flags; flags win.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub corpus: Option<PathBuf>,
    pub entropy_threshold: Option<f64>,
    pub coverage_threshold: Option<f64>,
    pub band: Option<f64>,
    pub seed: Option<u64>,
    pub bootstrap: Option<usize>,
    pub format: Option<Format>,
}

impl Config {
    pub fn load(path: &Path) -> anyhow::Result<Config> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn corpus(&self, flag: Option<PathBuf>) -> anyhow::Result<PathBuf> {
        match flag.or_else(|| self.corpus.clone()) {
            Some(p) => Ok(p),
            None => bail!("no corpus given (use --corpus or set `corpus` in the config file)"),
        }
    }
}

/// Flag if given, else config value, else default.
pub fn pick<T>(flag: Option<T>, config: Option<T>, default: T) -> T {
    flag.or(config).unwrap_or(default)
}
