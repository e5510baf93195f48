//! IO side of `c2knot`: the command-line interface, CSV/JSON formats, the
//! knot-name registry and the on-disk table cache. All mathematics lives in
//! `c2knot-core`.

pub mod cache;
pub mod cli;
pub mod formats;
pub mod names;
pub mod tables;

use c2knot_core::TwoBridgeKnot;

/// Errors surfaced by commands, each mapped to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Core(#[from] c2knot_core::Error),

    #[error("no knot named {0:?}")]
    UnknownName(String),

    #[error("cross-check disagreement at {knot}: staged c2 = {staged}, global enumeration = {global}")]
    CrossCheck {
        knot: TwoBridgeKnot,
        staged: u64,
        global: u64,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Core(_) => 2,
            CliError::UnknownName(_) => 3,
            CliError::CrossCheck { .. } => 4,
            CliError::Io { .. } | CliError::Json(_) | CliError::Csv(_) => 1,
        }
    }

    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
