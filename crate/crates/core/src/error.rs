use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("field of order {p}^{s} exceeds the size bound {bound}")]
    FieldTooLarge { p: u64, s: u32, bound: u64 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("negative power of zero")]
    ZeroNegativePower,

    #[error("operands belong to different fields ({0} and {1})")]
    FieldMismatch(String, String),

    #[error("element index {index} out of range for a field of order {q}")]
    ElementOutOfRange { index: u64, q: u32 },

    #[error("{l} does not divide the extension degree {s}")]
    NotASubfield { l: u32, s: u32 },

    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("degree must be at least 1")]
    ZeroPolyDegree,

    #[error("restriction set is empty")]
    EmptyRestriction,

    #[error("enumerating {needed} points exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("Dickson parameter must be nonzero (use the power-map count for a = 0)")]
    ZeroParameter,

    #[error("value-set formula produced a non-integer ({0})")]
    NonIntegralFormula(String),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}
