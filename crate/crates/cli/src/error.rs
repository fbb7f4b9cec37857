use std::path::PathBuf;

use num_bigint::BigInt;
use stacky_core::form::BinaryQuadraticForm;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] stacky_core::Error),
    #[error("{0}")]
    Parse(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("catalog: {0}")]
    Csv(#[from] csv::Error),
    #[error("witness {witness} for {form} fails re-verification")]
    WitnessRejected {
        form: Box<BinaryQuadraticForm>,
        witness: BigInt,
    },
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl From<stacky_core::form::ParseFormError> for CliError {
    fn from(e: stacky_core::form::ParseFormError) -> Self {
        CliError::Parse(e.to_string())
    }
}
