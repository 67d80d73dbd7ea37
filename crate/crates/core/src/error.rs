use thiserror::Error;

/// Errors shared across the crate.
///
/// Absence of an LCM, a quotient or a unit is *not* an error anywhere in this
/// crate; those are encoded as `Option::None`. Errors are reserved for
/// resource ceilings, undecidable-at-this-depth situations (bounded searches
/// on automaton backends), and genuinely invalid inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("enumeration of {count} elements exceeds the ceiling of {ceiling}")]
    ResourceLimit { count: usize, ceiling: usize },

    /// A bounded search was exhausted without deciding the question. Only
    /// automaton-backed instances produce this; the shipped exact instances
    /// (free, grid, odometer) never do.
    #[error("bounded search exhausted: {0}")]
    Inconclusive(String),

    #[error("operation not supported by this instance: {0}")]
    Unsupported(String),

    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    #[error("element is not a nonzero idempotent")]
    NotIdempotent,

    #[error("zero element has no value here")]
    ZeroElement,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("bad automaton description: {0}")]
    BadAutomaton(String),
}

pub type Result<T> = std::result::Result<T, Error>;
