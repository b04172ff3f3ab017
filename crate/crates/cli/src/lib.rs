//! Command implementations behind the `greedy-energy` binary.
//!
//! Every data file is written together with a `<file>.manifest.json` sidecar
//! holding the command, its parameters, the library version and the SHA-256 of
//! the file. Floats are written with 17 significant digits in CSV and as
//! shortest round-trip decimals in JSON.

pub mod args;
pub mod commands;
pub mod output;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] greedy_energy::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
