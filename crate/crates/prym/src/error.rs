use std::path::PathBuf;

use thiserror::Error;

/// Anything that stops a run before a mathematical verdict is reached.
/// All of these exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed TOML input: {0}")]
    Toml(#[from] toml::de::Error),
    #[error(transparent)]
    Core(#[from] prym_core::Error),
}

pub type CliResult<T> = Result<T, CliError>;
