use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("lattice is not even: diagonal entry {index} is odd")]
    NotEven { index: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("generators are linearly dependent over Q")]
    DependentGenerators,
    #[error("glue vector {index} has a non-integral pairing with the lattice")]
    NonIntegralGlue { index: usize },
    #[error("glue vector {index} has odd or non-integral norm")]
    OddGlueNorm { index: usize },
    #[error("discriminant group is not 2-elementary")]
    NotTwoElementary,
    #[error("zero vector has no divisibility")]
    ZeroVector,
    #[error("rescaled lattice would not be even")]
    OddRescale,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("finite group of order {0} exceeds the isomorphism search bound")]
    GroupTooLarge(u128),
    #[error("inadmissible finite quadratic form data: {0}")]
    Inadmissible(String),
    #[error("vector search exhausted at radius {0}")]
    SearchExhausted(u64),
    #[error("vector is not primitive")]
    NotPrimitive,
    #[error("BBF value must be even, got {0}")]
    OddQValue(i64),
    #[error("Weil multiple must be odd, got {0}")]
    EvenMultiple(i64),
    #[error("coefficient k must be 0 or -1, got {0}")]
    InvalidCoefficient(i64),
    #[error("wedge degree {0} exceeds 7")]
    DegreeOverflow(usize),
    #[error("basis is linearly dependent")]
    DependentBasis,
    #[error("could not factor {0}")]
    Factorization(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
