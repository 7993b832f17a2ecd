use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: file is not valid UTF-8 (byte offset {offset})")]
    Encoding { path: PathBuf, offset: usize },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("empty term list: {0}")]
    EmptyTermList(String),

    #[error("{path}: no lines in corpus")]
    EmptyCorpus { path: PathBuf },

    #[error("{path}: missing column `{column}`")]
    MissingColumn { path: PathBuf, column: String },

    #[error("{path}: unmapped label(s): {}", labels.join(", "))]
    UnmappedLabel { path: PathBuf, labels: Vec<String> },

    #[error("{path}: {found} documents but {expected} labels")]
    LabelCountMismatch {
        path: PathBuf,
        expected: usize,
        found: usize,
    },

    #[error("invalid placeholder pattern `{pattern}`: {source}")]
    Pattern {
        pattern: String,
        #[source]
        source: regex::Error,
    },

    #[error("unknown class label `{0}` (expected hate, relative_hate or no_hate)")]
    UnknownClass(String),

    #[error("empty task side: {0}")]
    EmptyTaskSide(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
