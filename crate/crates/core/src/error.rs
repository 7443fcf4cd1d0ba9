use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("linear system has no unique solution")]
    SingularSystem,
    #[error("derived summand fails at n = {n}: lhs {lhs}, rhs {rhs}")]
    VerificationFailed { n: u64, lhs: String, rhs: String },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
