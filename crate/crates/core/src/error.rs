use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("algebra is not finite dimensional: more than {cap} nonzero paths")]
    NotFiniteDimensional { cap: usize },

    #[error("malformed configuration: {0}")]
    MalformedFbc(String),

    #[error("ill-formed configuration: {0}")]
    IllFormed(String),

    #[error("configuration is not symmetric (Nakayama permutation is not the identity)")]
    NotSymmetric,

    #[error("configuration does not have trivial degree")]
    NotTrivialDegree,

    #[error("configuration is not of type S: {0}")]
    NotTypeS(String),

    #[error("no valid length bound up to {cap}; the quotient does not look nilpotent")]
    BoundCapExceeded { cap: usize },

    #[error("a nonzero path is longer than {limit} arrows")]
    PathLengthExceeded { limit: usize },

    #[error("path space exceeds {limit} columns")]
    PathSpaceTooLarge { limit: usize },

    #[error("isomorphism search exceeded its budget of {budget} nodes")]
    SearchBudgetExceeded { budget: u64 },

    #[error("fuzzer rejected {attempts} consecutive samples for instance {index}")]
    ResampleBudgetExceeded { index: usize, attempts: usize },

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Resource caps map to their own exit status in the CLI.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::NotFiniteDimensional { .. }
                | Error::PathLengthExceeded { .. }
                | Error::BoundCapExceeded { .. }
                | Error::PathSpaceTooLarge { .. }
                | Error::SearchBudgetExceeded { .. }
                | Error::ResampleBudgetExceeded { .. }
        )
    }

    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_) | Error::MalformedFbc(_) | Error::Json(_) | Error::Io(_)
        )
    }
}
