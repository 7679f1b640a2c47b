use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Rejected input parameters (modulus, prime, flags).
    #[error("invalid input: {0}")]
    Validation(String),

    /// An argument outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// A computed quantity broke an identity that must hold.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("unknown export format `{0}`")]
    UnknownFormat(String),
}
