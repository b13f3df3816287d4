use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Parse` covers malformed input text (files, literals); everything else is
/// a semantic problem with otherwise well-formed input. The CLI maps the two
/// groups to distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} supports at most {max}, got {got}")]
    SizeLimit {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("a star needs at least one leaf")]
    DegenerateStar,

    #[error("an oriented path needs at least one sign")]
    EmptyPath,

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("not a directed tree: {0}")]
    NotATree(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Exit code the CLI uses for this error: 2 for parse errors, 3 for
    /// semantic errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
