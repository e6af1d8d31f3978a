use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Coxeter symbol {0:?}: expected six comma-separated integers")]
    MalformedSymbol(String),
    #[error("Coxeter symbol entry {value} at position {position} is below 2")]
    EntryTooSmall { position: usize, value: u32 },
    #[error("malformed permutation {0:?}")]
    MalformedPerm(String),
    #[error("malformed word {0:?}")]
    MalformedWord(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {0} exceeds the supported maximum of {max}", max = crate::perm::MAX_DEGREE)]
    DegreeCap(usize),
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("assignment has {got} generator images, presentation has {expected} generators")]
    GeneratorCount { expected: usize, got: usize },
    #[error("relator {0} is not killed by the assignment")]
    RelatorNotSatisfied(String),
    #[error("assignment does not act transitively")]
    NotTransitive,
    #[error("the exhaustive oracle only supports degree up to 4, got {0}")]
    OracleDegree(usize),
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("class ordinal {ordinal} out of range (1..={count})")]
    OrdinalOutOfRange { ordinal: usize, count: usize },
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
