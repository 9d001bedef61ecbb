use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument failed (non-monic input, zero polynomial,
    /// non-fundamental discriminant, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The operation is only implemented for degrees 2 and 3.
    #[error("unsupported degree {0}: only degrees 2 and 3 are implemented")]
    UnsupportedDegree(usize),

    /// A mathematical hypothesis of the asymptotic formula failed for the
    /// given input (reducible polynomial, field not totally real).
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    /// An enumeration exceeded its configured operation budget.
    #[error("operation budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    /// The lattice census window p^c was too shallow for the input.
    #[error("census depth {depth} insufficient for p={p}; retry with a larger depth")]
    DepthInsufficient { p: u64, depth: u32 },

    /// Reading or writing invariant files / caches failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A remote invariant lookup failed.
    #[error("network error: {0}")]
    Network(String),

    /// A JSON payload (file or remote) did not match the expected schema.
    #[error("parse error: {reason}; offending payload excerpt: {excerpt}")]
    Parse { reason: String, excerpt: String },

    /// Internal consistency check failed; indicates a bug, not a user error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
