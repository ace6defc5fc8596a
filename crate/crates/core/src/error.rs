use thiserror::Error;

/// Errors raised by the library. Every variant except [`Error::Internal`]
/// describes bad input; the CLI maps those to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema violation: {0}")]
    Schema(String),

    #[error("group axioms fail: {0}")]
    GroupAxiom(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("boundary does not square to zero at degree {degree}: {detail}")]
    BoundarySquare { degree: usize, detail: String },

    #[error("chain map does not commute with the boundary at degree {degree}: {detail}")]
    ChainMapNotCommuting { degree: usize, detail: String },

    #[error("relative mask violated at degree {degree}: {detail}")]
    Mask { degree: usize, detail: String },

    #[error("isotropy violation at degree {degree}: {detail}")]
    Isotropy { degree: usize, detail: String },

    #[error("non-split extension requested: {0}")]
    NonSplit(String),

    #[error(
        "fixed-point indices must agree on an orbit: orbit '{orbit}' of class {iso_class} \
         has indices {first} and {second}"
    )]
    OrbitIndexMismatch {
        iso_class: String,
        orbit: String,
        first: String,
        second: String,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by invalid input rather than a library fault.
    pub fn is_user_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
