use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),

    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("(c + k*hbar) with k = 0 is not a unit")]
    NotAUnit,

    #[error("invalid flag shape: {0}")]
    InvalidShape(String),

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("class is not Weyl-invariant")]
    NotWeylInvariant,

    #[error("class is not homogeneous")]
    Inhomogeneous,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(i64, i64),

    #[error("invalid degree vector: {0}")]
    InvalidDegree(String),

    #[error("twist is not nef: pairing {pairing} with lift {lift:?}")]
    NotNef { pairing: i64, lift: Vec<i64> },

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("unsupported method: {0}")]
    UnsupportedMethod(String),

    #[error("malformed serialized value: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
