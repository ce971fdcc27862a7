use thiserror::Error;

/// Errors shared by every module in the crate.
///
/// The three variants line up with the CLI exit codes: bad input (2),
/// an exhausted search budget (3), and a construction whose mandatory
/// self-check failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("construction defect: {0}")]
    ConstructionDefect(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn defect<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::ConstructionDefect(msg.into()))
}
