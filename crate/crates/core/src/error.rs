use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("invalid presentation: {0}")]
    Validation(String),

    #[error("invalid word {word:?}: {msg}")]
    Word { word: String, msg: String },

    #[error("elements are bound to different presentations")]
    Binding,

    #[error("the identity has no normalisation")]
    IdentityNormalisation,

    #[error("the group is infinite; enumeration needs all relative orders positive")]
    InfiniteGroup,

    #[error("group order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: String, bound: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
