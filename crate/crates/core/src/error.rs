use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} limited to n <= {limit}, got n = {got}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error(
        "no connected graph with connected complement after {rounds} rounds \
         (n = {n}, edge probability {probability}); try a different edge probability"
    )]
    SamplingFailure {
        n: usize,
        probability: String,
        rounds: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
