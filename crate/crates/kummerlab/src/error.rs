use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] kummerlab_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("no check matches `{0}`")]
    UnknownCheck(String),
    #[error("invalid check pattern `{pattern}`: {message}")]
    BadPattern { pattern: String, message: String },
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("basis {found:?} does not match the expected basis {expected:?}")]
    BasisMismatch {
        expected: Vec<String>,
        found: Vec<String>,
    },
    #[error("basis has {basis} labels but {coords} coordinates")]
    LengthMismatch { basis: usize, coords: usize },
    #[error("node `{0}` listed twice")]
    DuplicateNode(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
