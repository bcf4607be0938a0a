use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("strand count {0} out of range (2..={max})", max = crate::braid::MAX_STRANDS)]
    BadStrands(usize),

    #[error("generator index {index} out of range for {strands} strands")]
    BadGenerator { index: i64, strands: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource guard exceeded: {0}")]
    ResourceGuard(String),

    #[error("handle reduction exceeded the word-length cap of {cap} letters")]
    BlowUp { cap: usize },

    #[error("insufficient coverage: {0}")]
    Coverage(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;
