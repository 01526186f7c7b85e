use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("{0} is not invertible modulo {1}")]
    BadReduction(String, u64),
    #[error("modulus {0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("not a binary form: {0}")]
    NotBinaryForm(String),
    #[error("Groebner basis computation exceeded the limit of {0} S-pairs")]
    ResourceExhausted(usize),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("ideal is not zero-dimensional (projective dimension {0})")]
    NotZeroDimensional(i64),
    #[error("map components have different degrees")]
    DegreeMismatch,
    #[error("every component of the map is zero")]
    AllZeroMap,
    #[error("the zero tensor has no collineation variety")]
    ZeroTensor,
    #[error("tensor is not concise in factor {0}")]
    NotConcise(usize),
    #[error("minor size {k} is out of range for a {rows}x{cols} matrix")]
    BadMinorSize { k: usize, rows: usize, cols: usize },
    #[error("collineation variety undefined: {0}")]
    UndefinedCollineation(String),
    #[error("expected dimensions {expected:?}, got {got:?}")]
    WrongDims { expected: [usize; 3], got: [usize; 3] },
    #[error("empty block specification")]
    EmptySpec,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("missing parameter {0:?}")]
    MissingParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
