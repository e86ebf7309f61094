use thiserror::Error;

use crate::graphoidal::CoverViolation;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unsupported size: {what} is {actual}, limit is {limit}")]
    UnsupportedSize {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("capacity exceeded: {what} reached the cap of {cap} (partial count {partial})")]
    Capacity {
        what: &'static str,
        cap: usize,
        partial: usize,
    },

    #[error("distinguishing index undefined: a non-identity automorphism fixes every edge")]
    UndefinedIndex,

    #[error("unknown catalog graph `{name}`; valid names: {valid}")]
    Catalog { name: String, valid: String },

    #[error("malformed path {index}: {message}")]
    MalformedPath { index: usize, message: String },

    #[error("invalid graphoidal cover: {0}")]
    InvalidCover(CoverViolation),

    #[error("cover file parse error on line {line}: {message}")]
    CoverFormat { line: usize, message: String },
}

impl Error {
    pub(crate) fn arg(message: impl Into<String>) -> Self {
        Error::Argument(message.into())
    }

    /// True for errors caused by a search or enumeration hitting its cap.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. } | Error::UnsupportedSize { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
