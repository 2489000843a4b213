use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero ordinal has no support")]
    ZeroOrdinal,

    #[error("ambient variable count mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("colon by the zero ideal (unit-ideal convention)")]
    ColonByZero,

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("J is not contained in I; not a subquotient")]
    NotSubquotient,

    #[error("not a submodule of the ambient module")]
    NotSubmodule,

    #[error("requires binary module")]
    NotBinary,

    #[error("filtration index {e} exceeds variable count {n}")]
    FiltrationIndex { e: usize, n: usize },

    #[error("no monomial witness found for prime {0}")]
    WitnessNotFound(String),

    #[error("guard exceeded: {what} = {value} > {limit}")]
    Guard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid bound: {0}")]
    InvalidBound(String),

    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("ideal is not Artinian: no pure power of variable {0}")]
    NotArtinian(usize),

    #[error("operation requires a nonzero module")]
    ZeroModule,
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
