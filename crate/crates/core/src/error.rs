use thiserror::Error;

/// Errors raised by the library.
///
/// Validation outcomes that are expected results (a non-simple arrangement,
/// an invalid cycle, a missed cycle search) are reported through dedicated
/// report types instead; they only surface here once a caller turns them
/// into a hard failure.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ground set size {0} is out of range (1..={max})", max = crate::sign::MAX_ELEMENTS)]
    GroundSetSize(usize),

    #[error("invalid sign vector {0:?}: expected a non-empty string over '+' and '-'")]
    ParseSignVector(String),

    #[error("invalid rational {0:?}")]
    ParseRational(String),

    #[error("empty collection")]
    Empty,

    #[error("zero vector at position {0}")]
    ZeroVector(usize),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("arrangement is not simple: {0}")]
    NotSimple(String),

    #[error("invalid symmetric cycle: {0}")]
    InvalidCycle(String),

    #[error("first half of the cycle is linearly dependent")]
    SingularBasis,

    #[error("cycle coefficients for tope {0} are not in {{-1, 0, 1}}")]
    NonIntegralSolution(String),

    #[error("the full system is feasible; feasible-subsystem counts need an infeasible system")]
    FullSystemFeasible,

    #[error("brute-force oracle refused: t = {t} exceeds guard {guard}")]
    GuardExceeded { t: usize, guard: usize },

    #[error("decomposition of {tope} failed: {source}")]
    Tope {
        tope: String,
        #[source]
        source: Box<Error>,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
