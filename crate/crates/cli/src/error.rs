use thiserror::Error;

/// A failed invocation together with its process exit code.
#[derive(Debug, Error)]
pub enum Failure {
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("bound exceeded: {0}")]
    Bounds(String),
    #[error("formula and oracle disagree: {0}")]
    Mismatch(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::BadInput(_) => 2,
            Failure::Bounds(_) => 3,
            Failure::Mismatch(_) => 4,
            Failure::Io(_) | Failure::Csv(_) | Failure::Json(_) => 2,
        }
    }
}

impl From<cmcartan_core::Error> for Failure {
    fn from(e: cmcartan_core::Error) -> Self {
        match e {
            cmcartan_core::Error::BoundExceeded { .. } => Failure::Bounds(e.to_string()),
            other => Failure::BadInput(other.to_string()),
        }
    }
}
