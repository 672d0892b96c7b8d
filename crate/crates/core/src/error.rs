//! Error type shared across the toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Invalid(String),

    #[error("framework has support edges; this operation requires a SETAF")]
    NotSetaf,

    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("principle {principle} is not defined for family {family}: {why}")]
    BadCombination {
        principle: String,
        family: String,
        why: String,
    },

    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
