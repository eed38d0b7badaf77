use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty pattern")]
    EmptyPattern,

    #[error("{name} = {value} is out of range for a pattern of length {m}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        m: usize,
    },

    #[error("alphabet size {0} is outside [2, 256]")]
    SigmaOutOfRange(usize),

    #[error("unknown algorithm `{0}` (expected one of bf, cl, ft1, ft2, ft3)")]
    UnknownAlgorithm(String),

    #[error("invalid benchmark configuration: {0}")]
    InvalidConfig(String),

    #[error("table invariant violated: {0}")]
    Invariant(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
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
