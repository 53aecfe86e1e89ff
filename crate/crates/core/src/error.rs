use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u64, u64),
    #[error("gcd undefined")]
    GcdUndefined,
    #[error("infinite valuation")]
    InfiniteValuation,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not irreducible")]
    NotIrreducible(String),
    #[error("unsupported prime degree {0}")]
    UnsupportedPrimeDegree(usize),
    #[error("resultant of a zero polynomial")]
    ZeroResultantInput,
    #[error("projective point has all coordinates zero")]
    ZeroProjectivePoint,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("center on variety")]
    CenterOnVariety,
    #[error("invalid projection center: {0}")]
    InvalidCenter(String),
    #[error("not a basis: rows are linearly dependent")]
    NotABasis,
    #[error("matrix is not of full row rank")]
    RankDeficient,
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("point not on variety")]
    PointNotOnVariety,
    #[error("no constant point over F_{0} achieves the height of f")]
    NoNormalizingPoint(u64),
    #[error("degree budget exhausted at M = {0}")]
    DegreeBudgetExhausted(usize),
    #[error("no real square root at infinity")]
    NoSqrtAtInfinity,
    #[error("beta is a perfect square")]
    SquareBeta,
    #[error("continued fraction reached no unit within {0} steps")]
    NoPeriod(usize),
    #[error("gamma must be nonzero")]
    ZeroGamma,
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("no base solution for the factor t - {i} over F_{q}")]
    NoBaseSolution { i: u64, q: u64 },
    #[error("budget exceeded: visited {visited} nodes (search space estimate {estimate:.3e})")]
    BudgetExceeded { visited: u64, estimate: f64 },
    #[error("groebner budget exceeded: {0}")]
    GroebnerBudget(String),
    #[error("unit ideal: the variety is empty")]
    UnitIdeal,
    #[error("syntax error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Short machine-readable reason used in JSON reports.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::BudgetExceeded { .. } | Error::GroebnerBudget(_) => "budget",
            Error::Parse { .. } | Error::UnknownVariable(_) | Error::ExponentOverflow => "parse",
            Error::DegreeBudgetExhausted(_) => "degree-budget",
            _ => "math",
        }
    }
}
