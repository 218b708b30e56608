//! Library side of the `dps` binary. Each command returns a [`CliError`] whose
//! [`exit_code`](CliError::exit_code) is what the process exits with.

pub mod bench;
pub mod commands;
pub mod formats;
pub mod svg;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
    /// The polyline admits no curvature-bounded smoothing.
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("{0}")]
    NoPath(String),
    #[error("{0}")]
    Mismatch(String),
    /// A path was written, but its clearance is below the robot radius.
    #[error("{0}")]
    Uncertified(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => 1,
            CliError::Infeasible(_) => 2,
            CliError::NoPath(_) => 3,
            CliError::Mismatch(_) => 4,
            CliError::Uncertified(_) => 5,
        }
    }
}

/// Thread count for batch smoothing from `DPS_THREADS`; 0 (the default) means
/// the global pool.
pub fn batch_threads() -> usize {
    std::env::var("DPS_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}
