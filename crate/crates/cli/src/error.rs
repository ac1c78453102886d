use thiserror::Error;

/// Process exit status for each failure class.
pub mod exit {
    pub const OK: i32 = 0;
    pub const COMPUTATION: i32 = 1;
    /// Also what clap uses for unparsable arguments.
    pub const CONFIG: i32 = 2;
    pub const VERIFICATION: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Compute(#[from] component_ranks::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{failed} verification check(s) failed")]
    Verification { failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => exit::CONFIG,
            // Budget and range violations are requests the engines refuse up front.
            CliError::Compute(
                component_ranks::Error::EnumerationBudget { .. }
                | component_ranks::Error::RankOutOfRange { .. }
                | component_ranks::Error::SizeLimit { .. }
                | component_ranks::Error::ZeroRank
                | component_ranks::Error::EmptyObject
                | component_ranks::Error::InfiniteEntry
                | component_ranks::Error::RankListLength { .. },
            ) => exit::CONFIG,
            CliError::Verification { .. } => exit::VERIFICATION,
            _ => exit::COMPUTATION,
        }
    }
}
