use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::eigen::SpectrumClass;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty point cloud")]
    EmptyCloud,

    #[error("non-finite coordinate")]
    NonFinite,

    #[error("direction vector is zero")]
    ZeroDirection,

    #[error("moment vector is not orthogonal to the direction (component along it: {along:e})")]
    InconsistentMoment { along: f64 },

    #[error("eigensolver failed to converge")]
    NoConvergence,

    #[error("degenerate configuration: {class} (eigenvalues {eigenvalues:?})")]
    Degenerate {
        class: SpectrumClass,
        eigenvalues: [f64; 3],
    },

    #[error("fit result covers {expected} points but the cloud has {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
