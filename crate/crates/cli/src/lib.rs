//! Command-line front end for `lettercount`.

mod config;
mod run;

use std::path::PathBuf;

pub use config::{Command, Format, Inputs, MarkovCommand, RunConfig, StyleCommand};
pub use run::{model_paths, run};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("writing output: {0}")]
    Output(std::io::Error),
    #[error(transparent)]
    Data(#[from] lettercount::Error),
    #[error("{0}")]
    Invalid(String),
}
