use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible in the integral ring")]
    NotDivisible,
    #[error("conductor {0} does not divide {1}")]
    NotDivisor(u64, u64),
    #[error("matrix size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("permutation closure exceeded budget of {0} elements")]
    ClosureBudgetExceeded(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid boundary Seifert matrix: {0}")]
    InvalidSeifert(String),
    #[error("inadmissible psi map: {0}")]
    InadmissiblePsi(String),
    #[error("twisted determinant vanishes, rank exceeds k(m-1)")]
    RankTooLarge,
    #[error("Alexander polynomial vanishes at an eigenvalue of the axis")]
    RankJumps,
    #[error("cross-check mismatch: {0}")]
    CrossCheckMismatch(String),
    #[error("representation does not factor through a {0}-group")]
    NotPGroup(u64),
    #[error("factorization budget exceeded: cofactor {0} has no prime factor below {1}")]
    FactorizationBudgetExceeded(String, u64),
    #[error("internal exact-division failure in fraction-free elimination")]
    InternalDivisibilityFailure,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code for CLI reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ConductorMismatch(..) => "CONDUCTOR_MISMATCH",
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::NotDivisible => "NOT_DIVISIBLE",
            Error::NotDivisor(..) => "NOT_DIVISOR",
            Error::SizeMismatch(..) => "SIZE_MISMATCH",
            Error::ClosureBudgetExceeded(..) => "CLOSURE_BUDGET_EXCEEDED",
            Error::DimensionMismatch(..) => "DIMENSION_MISMATCH",
            Error::InvalidSeifert(..) => "INVALID_SEIFERT",
            Error::InadmissiblePsi(..) => "INADMISSIBLE_PSI",
            Error::RankTooLarge => "RANK_TOO_LARGE",
            Error::RankJumps => "RANK_JUMPS",
            Error::CrossCheckMismatch(..) => "CROSS_CHECK_MISMATCH",
            Error::NotPGroup(..) => "NOT_P_GROUP",
            Error::FactorizationBudgetExceeded(..) => "FACTORIZATION_BUDGET_EXCEEDED",
            Error::InternalDivisibilityFailure => "INTERNAL_DIVISIBILITY_FAILURE",
            Error::Parse(..) => "PARSE_ERROR",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
