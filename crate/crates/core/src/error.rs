use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid tour: {0}")]
    InvalidTour(String),

    #[error("instance too large for exhaustive search: {n} cities (limit {limit})")]
    InstanceTooLarge { n: usize, limit: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("I/O error{}: {source}", path.as_ref().map(|p| format!(" on {}", p.display())).unwrap_or_default())]
    Io {
        path: Option<PathBuf>,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        Error::Io {
            path: Some(path.to_path_buf()),
            source,
        }
    }
}

#[derive(Debug, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header `{0}`")]
    MalformedHeader(String),
    #[error("missing {0}")]
    MissingField(&'static str),
    #[error("unsupported problem type `{0}`")]
    UnsupportedType(String),
    #[error("unsupported edge weight type `{0}` (only EUC_2D)")]
    UnsupportedEdgeWeight(String),
    #[error("unsupported section `{0}`")]
    UnsupportedSection(String),
    #[error("DIMENSION is {declared} but {found} coordinates were given")]
    DimensionMismatch { declared: usize, found: usize },
    #[error("coordinate line needs an id and two values")]
    MalformedCoordinate,
    #[error("non-numeric coordinate `{0}`")]
    NonNumericCoordinate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
