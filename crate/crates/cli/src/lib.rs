//! Command-line front end for polymatch: JSON documents, bundled fixtures
//! and one subcommand per operation. Exit codes: 0 pass, 1 semantic failure
//! (witness in the report), 2 input error.

pub mod commands;
pub mod document;
mod render;

pub use commands::{run, Cli, Command, Format};
pub use document::{Document, Kind};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("{0}")]
    Semantic(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Semantic(_) => 1,
        }
    }
}

impl From<polymatch::Error> for CliError {
    fn from(e: polymatch::Error) -> Self {
        use polymatch::Error as E;
        match e {
            E::EmptyBasisSet
            | E::MixedRank
            | E::OutOfRange { .. }
            | E::Config(_)
            | E::InvalidMatching(_)
            | E::SupportViolation { .. }
            | E::ZeroEntry { .. }
            | E::UnknownHyperfield(_)
            | E::DomainMismatch(_)
            | E::DeskScaleLimit(_) => CliError::Input(e.to_string()),
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

/// A rendered document and whether the command's check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub doc: Document,
    pub ok: bool,
}

impl Output {
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}
