use thiserror::Error;

use crate::expr::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("zero has no divisor")]
    ZeroHasNoDivisor,

    #[error("{0}: argument must be nonzero")]
    ZeroArgument(&'static str),

    #[error("operation requires infinity minus infinity")]
    InfinityMinusInfinity,

    #[error("L′ bound needs nonconstant, independent arguments: {0}")]
    LprimeHypotheses(String),

    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),

    #[error("degenerate recurrence: root {0} / root {1} is constant")]
    Degenerate(usize, usize),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("identity fails: {0}")]
    IdentityFails(String),

    #[error("{0} is not an S-unit")]
    NotSUnit(String),

    #[error("proper subsum vanishes: indices {0:?}")]
    VanishingSubsum(Vec<usize>),

    #[error("not linearly independent over the constants")]
    NotIndependent,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("enumeration budget exceeded: {len} values (limit {limit})")]
    EnumerationBudget { len: usize, limit: usize },

    #[error("requires polynomial data: {0}")]
    NotPolynomial(String),

    #[error("place polynomial is reducible, factors: {0}")]
    ReduciblePlace(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("config: {0}")]
    Config(String),
}
