use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A certificate could not be produced before the refinement cap was reached.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    /// The input violates a hypothesis of the result being applied.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A certified verdict disagreed with exact simulation.
    #[error("internal contradiction: {0}")]
    Contradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// The message without its category prefix.
    pub fn detail(&self) -> &str {
        match self {
            Error::PrecisionExhausted(m) | Error::Hypothesis(m) | Error::InvalidInput(m) | Error::Contradiction(m) => m,
        }
    }
}
