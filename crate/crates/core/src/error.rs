use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("word length {0} outside the supported range 1..=32")]
    InvalidLength(usize),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("radius {radius} out of range for length {length}")]
    RadiusOutOfRange { radius: usize, length: usize },

    #[error("coordinate {coord} out of range for length {length}")]
    CoordinateOutOfRange { coord: usize, length: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate codeword {0}")]
    DuplicateWord(String),

    #[error("code is empty")]
    EmptyCode,

    #[error("length {0} too large for exhaustive scan (max 16)")]
    TooLongForExhaustive(usize),

    #[error("puncturing merged two codewords into {0}")]
    Collision(String),

    #[error("not a perfect code: {0}")]
    NotPerfect(String),

    #[error("lambda table does not match base code: {0}")]
    IncompleteLambda(String),

    #[error("unknown bound {0:?}")]
    InvalidBoundName(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("not an NP1CC: {0}")]
    NotNp1cc(String),

    #[error("word {0} is not a codeword")]
    NotCodeword(String),

    #[error("codeword {word} has {count} candidate partners within distance 2")]
    PartnerCount { word: String, count: usize },

    #[error("weight signature matches no extended perfect code kind: {0}")]
    UnknownKind(String),

    #[error("extended code kind mismatch: {0}")]
    KindMismatch(String),

    #[error("code is not of type A")]
    NotTypeA,

    #[error("code is not zeroed")]
    NotZeroed,

    #[error("({a0}, {a1}) is not a weight-distribution case")]
    InvalidCase { a0: i64, a1: i64 },

    #[error("non-integer coefficient at index {0}")]
    NonInteger(usize),

    #[error("capsules overlap at {0}")]
    CapsuleOverlap(String),

    #[error("not self-dual: {0}")]
    NotSelfDual(String),

    #[error("not an extended NP1CC: {0}")]
    NotEnp1cc(String),
}
