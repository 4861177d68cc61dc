use thiserror::Error;

use crate::spacetime::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("missing value at {0}")]
    MissingDependency(LatticePoint),
    #[error("shared edges do not match: {0}")]
    EdgeMismatch(String),
    #[error("not a hive: {0}")]
    NotHive(String),
    #[error("not a quasi-hive")]
    NotQuasiHive,
    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidGt(String),
    #[error("tableau is not {0}-dominant")]
    NotDominant(String),
    #[error("embedding is not {0}-flippable")]
    NotFlippable(usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("row insertion overflowed past row {0}")]
    RowOverflow(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
