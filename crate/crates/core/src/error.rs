use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A location in parsed source text, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Position {
    pub origin: String,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.origin, self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands are defined over different alphabets")]
    AlphabetMismatch,

    #[error("program is not Horn: {0}")]
    NotHorn(String),

    #[error("not a permutation of the alphabet: {0}")]
    NotBijective(String),

    #[error("`{0}` is reserved for the truth constants")]
    ReservedAtom(String),

    #[error("`{0}` is not a valid atom name")]
    InvalidAtom(String),

    #[error("atom `{0}` is not in the alphabet")]
    UnknownAtom(String),

    #[error("alphabet has {size} atoms, enumeration bound is {bound}")]
    AlphabetTooLarge { size: usize, bound: usize },

    #[error("no law named `{0}`")]
    UnknownLaw(String),

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),

    #[error("internal mismatch: {0}")]
    InternalMismatch(String),

    #[error("{at}: {message}")]
    Syntax { at: Position, message: String },

    #[error("{at}: `{atom}` is reserved for the truth constants")]
    ReservedAtomAt { at: Position, atom: String },

    #[error("{at}: atom `{atom}` is not declared by #alphabet")]
    UndeclaredAtom { at: Position, atom: String },
}

impl Error {
    /// Source position for errors raised by the parser.
    pub fn position(&self) -> Option<&Position> {
        match self {
            Error::Syntax { at, .. }
            | Error::ReservedAtomAt { at, .. }
            | Error::UndeclaredAtom { at, .. } => Some(at),
            _ => None,
        }
    }
}
