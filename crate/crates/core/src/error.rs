use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator {0} is not homogeneous")]
    NonHomogeneous(String),
    #[error("ring mismatch: expected at most {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },
    #[error("ideal is not quasi-stable: {0}")]
    NotQuasiStable(String),
    #[error("Hilbert polynomial is not admissible: {0}")]
    NotAdmissible(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal bound exceeded: {0}")]
    BoundExceeded(String),
}

impl Error {
    /// Exit status used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::NonHomogeneous(_) => 2,
            Error::BoundExceeded(_) => 4,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
