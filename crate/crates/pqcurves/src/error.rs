use thiserror::Error;

/// Error type shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation that requires a nonzero integer received zero.
    #[error("zero input")]
    ZeroInput,

    /// An argument was outside the operation's domain.
    #[error("domain error: {0}")]
    DomainError(String),

    /// A Weierstrass model (or parameter choice) with vanishing discriminant.
    #[error("singular: {0}")]
    SingularCurve(String),

    /// A parameter for which the clearing transformation is undefined.
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    /// A point that does not satisfy the curve equation exactly.
    #[error("point not on curve: {0}")]
    PointNotOnCurve(String),

    /// A solution generator was asked for solutions that do not exist.
    #[error("no solution: {0}")]
    NoSolution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
