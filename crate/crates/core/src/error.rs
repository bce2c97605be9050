use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input text or a bad invocation.
    Usage,
    /// Well-formed input outside the mathematical domain (links, degenerate tangles).
    Domain,
    /// A computed object broke one of its own invariants.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("malformed continued fraction: {0}")]
    MalformedContinuedFraction(String),

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("degenerate tangle: {0}")]
    DegenerateTangle(String),

    #[error("degenerate slope: {0}")]
    DegenerateSlope(String),

    #[error("degenerate diagram: {0}")]
    DegenerateDiagram(String),

    #[error("invalid PD code: {0}")]
    InvalidPd(String),

    #[error("not a knot ({components} components)")]
    NotAKnot { components: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unexpected expression shape: {0}")]
    Shape(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Syntax { .. } | Error::MalformedContinuedFraction(_) => ErrorClass::Usage,
            Error::Invariant(_) => ErrorClass::Internal,
            _ => ErrorClass::Domain,
        }
    }
}
