use std::io;

use thiserror::Error;

/// Errors produced by instance construction, simulation, and the harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A problem instance violates a structural requirement.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    /// An argument is inconsistent with the operation's contract.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A request exceeds a hard resource bound.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    /// An input file could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A mode reserved in the interface but not implemented.
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
