use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field degree {0} out of range 1..=16")]
    DegreeOutOfRange(u32),
    #[error("field mismatch: GF(2^{left}) vs GF(2^{right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("invalid scalar encoding {0:?}")]
    BadScalar(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid band: {0}")]
    InvalidBand(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("unknown subgroup {0:?}")]
    UnknownSubgroup(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("relation violated: {0}")]
    Relation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("endomorphism ring is not local: found a non-nilpotent non-unit")]
    NotLocal,
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
