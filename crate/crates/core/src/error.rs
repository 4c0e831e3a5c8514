use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singular division: {0}")]
    SingularDivision(String),
    #[error("unsupported branch: {0}")]
    UnsupportedBranch(String),
    #[error("composition error: {0}")]
    Composition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
