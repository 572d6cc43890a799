use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("denominator vanishes identically")]
    ZeroDenominator,
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error("braid kind incompatible with {0}")]
    IncompatibleKind(String),
    #[error("subset D must be non-empty")]
    EmptySubset,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown relation '{0}'")]
    UnknownRelation(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
