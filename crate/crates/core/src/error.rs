use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} of {requested} exceeds the configured budget of {budget}")]
    Resource {
        what: &'static str,
        requested: u64,
        budget: u64,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("series is not invertible over the integers (leading coefficient {0})")]
    NotInvertible(i64),

    #[error("q = {q} is outside the residue class required by {family}")]
    Classification { q: u64, family: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("tolerance {requested:e} unreachable at the configured cutoff; best certified bound {achievable:e}")]
    Precision { requested: f64, achievable: f64 },

    #[error("outside the domain: {0}")]
    Domain(String),

    #[error("distance to the nearest integer falls inside the guard band around delta at n = {0:?}")]
    Undecidable(Vec<u64>),

    #[error("coefficient {index} of {context} is not an integer")]
    NotIntegral { context: String, index: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The caller asked for something ill-formed.
    Usage,
    /// A budget, precision or numerical limit was hit.
    Resource,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Argument(_) | Error::Classification { .. } | Error::Domain(_) => ErrorKind::Usage,
            _ => ErrorKind::Resource,
        }
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
