use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree error: {0}")]
    Degree(String),
    #[error("boundary column {column} is not in the span of the cycle basis")]
    InclusionViolation { column: usize },
    #[error("vector is not a cycle of this subquotient")]
    NotACycle,
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("element is not central")]
    NotCentral,
    #[error("element is not invariant under the bimodule actions")]
    NotInvariant,
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("snake-lemma lift failed: {0}")]
    LiftFailed(String),
    #[error("linear system unsolvable: {0}")]
    Unsolvable(String),
    #[error("resource guard: {requested} coordinates requested, cap is {cap}")]
    ResourceGuard { requested: usize, cap: usize },
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid bimodule morphism: {0}")]
    NotAMorphism(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
