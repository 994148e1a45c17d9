use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} is outside the alphabet 1..={size}")]
    InvalidLetter { letter: usize, size: usize },

    #[error("alphabet of size {size} cannot hold a word using letter {letter}")]
    AlphabetMismatch { letter: usize, size: usize },

    #[error("malformed Coxeter matrix: {0}")]
    MalformedMatrix(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} exceeded its cap of {cap}")]
    ResourceCap { what: &'static str, cap: usize },

    #[error("operation needs a finite group, but the system is infinite")]
    InfiniteGroup,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Whether the error was caused by malformed user input rather than by
    /// a computation running out of budget or disproving an invariant.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidLetter { .. }
                | Error::AlphabetMismatch { .. }
                | Error::MalformedMatrix(_)
                | Error::Parse(_)
                | Error::InfiniteGroup
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
