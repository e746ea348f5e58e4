use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{file}:{line}: {reason}")]
    Parse {
        file: String,
        line: u64,
        reason: String,
    },

    #[error("{0}: empty file")]
    EmptyFile(String),

    #[error("source id must be nonempty")]
    EmptySourceId,

    #[error("source {0:?} is already post-stratified")]
    AlreadyStratified(String),

    #[error("source {0:?} appears more than once")]
    DuplicateSource(String),

    #[error("source {0:?} is neither post-stratified nor flagged pass-through")]
    Unstratified(String),

    #[error("at least one source is required")]
    NoSources,

    #[error("invalid report matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("invalid country code {0:?}")]
    InvalidCountry(String),

    #[error("invalid decade {0:?}")]
    InvalidDecade(String),

    #[error("name {0:?} is not in the reference table")]
    UnknownName(String),

    #[error("country list must be nonempty")]
    EmptyCountryList,

    #[error("predictions cover {preds} rows but the sample has {rows}")]
    RowMismatch { preds: usize, rows: usize },

    #[error("labeled sample is empty")]
    EmptySample,

    #[error("bootstrap needs at least 100 resamples, got {0}")]
    TooFewResamples(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(file: &str, line: u64, reason: impl Into<String>) -> Self {
        Error::Parse {
            file: file.to_string(),
            line,
            reason: reason.into(),
        }
    }
}
