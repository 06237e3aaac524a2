use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("a ring needs at least one variable")]
    NoVariables,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is excluded")]
    CharacteristicTwo,
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("operands use different monomial orders")]
    OrderMismatch,
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("free module elements have inconsistent rank ({0} vs {1})")]
    RankMismatch(usize, usize),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution is missing an image for variable `{0}`")]
    MissingAssignment(String),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("colon by the zero ideal")]
    ZeroIdeal,
    #[error("point is not on the zero set: {0}")]
    PointNotOnVariety(String),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("{0} is a zerodivisor: (I : h) != I")]
    ZeroDivisor(String),
    #[error("containment fails: {0}")]
    NotContained(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid double line: {0}")]
    InvalidDoubleLine(String),
    #[error("conditions and oracle disagree: {0}")]
    Discrepancy(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error("syntax error at line {line} col {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
