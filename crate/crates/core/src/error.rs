use thiserror::Error;

/// Usage-level failures: arguments outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{name} = {value} is out of range ({expected})")]
    OutOfRange {
        name: &'static str,
        value: String,
        expected: &'static str,
    },
    #[error("sequence prefix of length {len} is too short for {steps} difference steps")]
    PrefixTooShort { len: usize, steps: usize },
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn out_of_range(
        name: &'static str,
        value: impl ToString,
        expected: &'static str,
    ) -> Self {
        Error::OutOfRange {
            name,
            value: value.to_string(),
            expected,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
