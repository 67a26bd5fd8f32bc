use thiserror::Error;

/// Everything that ends the process with exit code 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] phipq::Error),

    #[error("cannot parse {0}")]
    Parse(String),
}
