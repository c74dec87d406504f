use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch")]
    RingMismatch,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a matching: {0}")]
    NotAMatching(String),
    #[error("wall violation: {0}")]
    WallViolation(String),
    #[error("generator index crosses wall: {0}")]
    GeneratorCrossesWall(usize),
    #[error("no wall-adjacent pair")]
    NoWallAdjacentPair,
    #[error("invalid contraction: ({0}, {1})")]
    InvalidContraction(usize, usize),
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("enumeration too large: {0}")]
    EnumerationTooLarge(String),
    #[error("not a permutation")]
    NotAPermutation,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("unknown cycle type: {0}")]
    UnknownCycleType(String),
    #[error("variable count mismatch: expected {expected}, got {got}")]
    VariableCountMismatch { expected: String, got: String },
    #[error("no generator e; use brute force")]
    NoGeneratorE,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("Jucys-Murphy elements do not commute: L{0} and L{1}")]
    JucysMurphyNotCommuting(usize, usize),
}
