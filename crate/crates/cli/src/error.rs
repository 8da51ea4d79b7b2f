use sasaki_core::linkgeom::LinkError;
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    /// 0 is success; 2 validation, 3 parse, 1 everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Validation(_) => 2,
            CliError::Io { .. } | CliError::Internal(_) => 1,
        }
    }

    /// For errors while building a link: all of them are about the input.
    pub(crate) fn invalid(e: LinkError) -> Self {
        CliError::Validation(e.to_string())
    }

    /// For errors during analysis of a link that was already accepted.
    pub(crate) fn internal(e: impl std::fmt::Display) -> Self {
        CliError::Internal(e.to_string())
    }
}
