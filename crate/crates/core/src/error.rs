use thiserror::Error;

/// Errors raised by the library. CLI exit codes are derived from the variant.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error("inexact division: {0}")]
    Inexact(String),
    #[error("undefined order: zero polynomial")]
    ZeroOrder,
    #[error("pole at root of unity: numerator order {num} < denominator order {den}")]
    Pole { num: usize, den: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("positivity violation: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            Error::Domain(_) => 3,
            Error::Inexact(_) | Error::ZeroOrder | Error::Pole { .. } | Error::Invariant(_) => 4,
            Error::Violation(_) => 5,
        }
    }
}
