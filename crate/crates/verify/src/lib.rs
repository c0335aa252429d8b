//! Named checks over `pi-core`, JSON reports and the `pi-verify` front end.

pub mod checks;
pub mod corpus;
pub mod report;

pub use checks::{find_check, run_check, run_suite, suite_passed, CheckInfo, Options, Suite, CHECKS, DEGREE_CAP};
pub use report::{CheckReport, Expected, Provenance, Status, WitnessReport};

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    /// Bad command line or parameters; exit code 2.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] pi_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl VerifyError {
    pub fn exit_code(&self) -> i32 {
        match self {
            VerifyError::Usage(_) => 2,
            _ => 1,
        }
    }
}
