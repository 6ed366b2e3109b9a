use thiserror::Error;

use crate::words::Letter;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} occurs {count} time(s); every letter must occur exactly twice")]
    NonGauss { letter: Letter, count: usize },

    #[error("invalid token {token:?} at offset {offset}")]
    BadToken { token: char, offset: usize },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("letter {0} does not occur")]
    MissingLetter(Letter),

    #[error("span {start}..{end} is not contained in a single component")]
    Span { start: usize, end: usize },

    #[error("letter {0} occurs in two different components")]
    SplitLetter(Letter),

    #[error("expected a {expected}-component phrase, found {found} components")]
    Arity { expected: usize, found: usize },

    #[error("illegal move {mv}: {reason}")]
    IllegalMove { mv: String, reason: String },

    #[error("malformed move {0:?}")]
    MoveSyntax(String),

    #[error("invalid search configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn illegal(mv: impl ToString, reason: impl Into<String>) -> Self {
        Error::IllegalMove {
            mv: mv.to_string(),
            reason: reason.into(),
        }
    }
}
