use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter lies outside the range where the invariant is defined.
    #[error("{0}")]
    Domain(String),

    #[error("length mismatch: {what} has {got} entries, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// A required analytic invariant was not supplied for a stratum.
    #[error("stratum {stratum}: missing required invariant `{field}`")]
    MissingInvariant { stratum: u32, field: &'static str },

    /// The input violates a hypothesis of the formula being evaluated.
    #[error("{0}")]
    Hypothesis(String),

    #[error("pair multiplicity at index 0 must be 0, got {0}")]
    NonZeroLeadingPair(String),

    #[error("malformed triangular system: {0}")]
    MalformedSystem(String),
}

impl Error {
    /// Short stable identifier, used for machine-readable error reporting.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::MissingInvariant { .. } => "missing-invariant",
            Error::Hypothesis(_) => "hypothesis",
            Error::NonZeroLeadingPair(_) => "nonzero-leading-pair",
            Error::MalformedSystem(_) => "malformed-system",
        }
    }
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

/// `1 <= s <= n`, the range shared by most operations.
pub(crate) fn check_s_n(s: u32, n: u32) -> Result<()> {
    if s < 1 || s > n {
        return Err(domain(format!(
            "s must satisfy 1 <= s <= n (got s={s}, n={n})"
        )));
    }
    Ok(())
}
