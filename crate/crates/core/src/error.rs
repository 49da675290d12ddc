use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type {0}")]
    InvalidType(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector is not dominant")]
    NotDominant,
    #[error("simple root {0} is not maximal")]
    NotMaximal(usize),
    #[error("subset {0} does not index a face")]
    NotInIndexSet(String),
    #[error("element is not in the cone of the face")]
    NotInCone,
    #[error("element has a negative coordinate")]
    NotPositive,
    #[error("operation requires a type A system")]
    WrongFamily,
    #[error("vector is not in the root lattice")]
    NotInRootLattice,
    #[error("enumeration exceeded cap of {cap} ({what})")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("no decomposition into at most {0} roots")]
    ExceedsRMax(usize),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
